"""q-Pochhammer products and q-binomial coefficients.

The finite symbol is (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k) with (a;q)_0 = 1,
extended to negative index by the convention (a;q)_{-n} = 1/(a q^{-n}; q)_n.
The infinite symbol (a;q)_inf converges for |q| < 1 and is truncated here
after N factors, where N is the smallest integer with

    |a| |q|^N / (1 - |q|)  <  eps_product,

which certifies a relative truncation error of at most twice that bound once
the bound is below 1/2.
"""

from __future__ import annotations

import math

import numpy as np

from .context import QContext, context_for
from .errors import ConvergenceError, DomainError, PoleError


class _InfinityTag:
    """Distinct marker for the infinite product index (not a number)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _InfinityTag()

PochhammerIndex = int | _InfinityTag

# Negative-index denominators this close to zero (relative) are poles.
_POLE_SNAP = 1e-12


def qpoch_finite(a, q, n: int):
    """Finite q-Pochhammer symbol (a;q)_n for any integer n.

    For n < 0 the value is 1/(a q^n; q)_{-n}; a vanishing factor in that
    denominator raises PoleError, and q = 0 raises DomainError.  `a` may be
    an array.
    """
    if n >= 0:
        return _ascending_product(a, q, n)
    if q == 0:
        raise DomainError("(a;q)_n with n < 0 requires q != 0")
    denominator = _ascending_product(a * q**n, q, -n, check_poles=True)
    return 1.0 / denominator


def _ascending_product(a, q, n, check_poles=False):
    acc = 1.0
    qk = 1.0
    for _ in range(n):
        w = a * qk
        factor = 1.0 - w
        if check_poles and np.any(np.abs(factor) <= _POLE_SNAP * (1.0 + np.abs(w))):
            raise PoleError("negative-index q-Pochhammer symbol hit a vanishing factor")
        acc = acc * factor
        qk = qk * q
    return acc


def qpoch_infinite(a, ctx: QContext):
    """Infinite q-Pochhammer symbol (a;q)_inf at base q = ctx.q.

    `a` may be an array; one shared truncation length is chosen from its
    largest modulus, so the certified tail bound holds elementwise.
    """
    q = ctx.q
    abs_q = abs(q)
    a_max = float(np.max(np.abs(a)))
    n_factors = _truncation_length(a_max, abs_q, ctx.eps_product * (1.0 - abs_q))
    if n_factors > ctx.max_product_terms:
        raise ConvergenceError(
            f"(a;q)_inf needs {n_factors} factors for the tail bound, "
            f"cap is {ctx.max_product_terms}"
        )
    scalar = np.ndim(a) == 0
    acc = 1.0 + 0j if scalar else np.ones(np.shape(a), dtype=complex)
    qk = 1.0
    for _ in range(n_factors):
        acc = acc * (1.0 - a * qk)
        qk = qk * q
    return complex(acc) if scalar else acc


def _truncation_length(scale: float, abs_q: float, target: float) -> int:
    """Smallest K >= 0 with scale * abs_q**K < target."""
    if scale < target:
        return 0
    if abs_q == 0.0:
        return 1
    n = max(0, math.ceil(math.log(target / scale) / math.log(abs_q)))
    while scale * abs_q**n >= target:
        n += 1
    return n


def qpoch_multi(values, q, n: PochhammerIndex, ctx: QContext | None = None):
    """Product shorthand (a_1, ..., a_k; q)_n over a finite or INFINITY index."""
    values = list(values)
    if not values:
        raise DomainError("qpoch_multi needs at least one argument")
    if n is INFINITY:
        c = context_for(q, ctx)
        out = 1.0
        for a in values:
            out = out * qpoch_infinite(a, c)
        return out
    if not isinstance(n, int):
        raise DomainError(f"index must be an integer or INFINITY, got {n!r}")
    out = 1.0
    for a in values:
        out = out * qpoch_finite(a, q, n)
    return out


def qbinom(n: int, k: int, q):
    """Gaussian binomial coefficient [n choose k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k}).

    Zero outside 0 <= k <= n.
    """
    if n < 0:
        raise DomainError("qbinom needs n >= 0")
    if k < 0 or k > n:
        return 0.0
    return qpoch_finite(q, q, n) / (qpoch_finite(q, q, k) * qpoch_finite(q, q, n - k))
