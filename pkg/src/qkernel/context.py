"""Global numeric policy: the base q plus truncation and convergence budgets."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class QContext:
    """Numeric policy shared by every truncated evaluation.

    `q` is the series base and must satisfy |q| < 1 strictly.  The three
    tolerances bound, respectively, the relative tail of truncated infinite
    products, the certified tail of series summations, and the doubling
    criterion of the periodic quadrature.  The caps stop runaway loops when
    a tolerance is unreachable.
    """

    q: complex
    eps_product: float = 1e-15
    eps_series: float = 1e-14
    eps_quad: float = 1e-11
    max_product_terms: int = 10_000
    max_series_terms: int = 100_000
    max_quad_nodes: int = 2**20

    def __post_init__(self) -> None:
        if abs(self.q) >= 1.0:
            raise DomainError(f"base q must satisfy |q| < 1, got |q| = {abs(self.q)}")
        for name in ("eps_product", "eps_series", "eps_quad"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be positive")
        for name in ("max_product_terms", "max_series_terms", "max_quad_nodes"):
            if getattr(self, name) < 16:
                raise DomainError(f"{name} must be at least 16")


def context_for(q, ctx: QContext | None = None) -> QContext:
    """Context with base `q`, keeping the budgets of `ctx` when given."""
    if ctx is None:
        return QContext(q=q)
    if ctx.q == q:
        return ctx
    return dataclasses.replace(ctx, q=q)
