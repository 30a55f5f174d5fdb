"""Integration engines and circle weight functions.

jackson_q_integral evaluates the discrete bilateral ladder sum that replaces
the Riemann integral in q-calculus; periodic_quadrature is a node-doubling
uniform trapezoid rule, which converges geometrically for the smooth
2 pi periodic integrands the identity checks integrate.  Integrals over
[0, pi] of even periodic integrands are taken as one half of the full-period
value, keeping the spectral rate.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

import numpy as np

from .context import QContext, context_for
from .errors import ConvergenceError, DomainError
from .pochhammer import qpoch_infinite


@dataclass(frozen=True)
class QuadratureResult:
    """Converged quadrature value with its last-doubling error estimate."""

    value: complex
    nodes_used: int
    error_estimate: float
    converged: bool


def periodic_quadrature(f, ctx: QContext) -> QuadratureResult:
    """Integrate f over [0, 2 pi] with the uniform trapezoid rule.

    `f` receives a numpy array of angles and must return the matching array
    of (possibly complex) values.  The node count doubles from 64 until the
    last doubling moves the value by at most eps_quad * (1 + |value|);
    ConvergenceError if max_quad_nodes is hit first.
    """
    nodes = 64
    previous = _trapezoid(f, nodes)
    while 2 * nodes <= ctx.max_quad_nodes:
        nodes *= 2
        current = _trapezoid(f, nodes)
        difference = abs(current - previous)
        if difference <= ctx.eps_quad * (1.0 + abs(current)):
            return QuadratureResult(current, nodes, difference, True)
        previous = current
    raise ConvergenceError("periodic_quadrature hit the node cap before converging")


def _trapezoid(f, n: int) -> complex:
    theta = (2.0 * np.pi / n) * np.arange(n)
    return (2.0 * np.pi / n) * complex(np.sum(np.asarray(f(theta))))


def jackson_q_integral(f, a, b, ctx: QContext) -> complex:
    """Jackson q-integral of f from a to b at base q = ctx.q:

        (1-q) b sum_{n>=0} q^n f(b q^n)  -  (1-q) a sum_{n>=0} q^n f(a q^n).

    Each ladder sum stops once the geometric tail bound
    max_recent|f| * |q|^{n+1} / (1 - |q|) drops below eps_series relative,
    where the max runs over the latest rungs (the ladder accumulates at 0).
    ConvergenceError if f grows too fast along the ladder for the bound to
    be met within max_series_terms.
    """
    q = ctx.q
    return (1.0 - q) * (b * _ladder_sum(f, b, ctx) - a * _ladder_sum(f, a, ctx))


def _ladder_sum(f, endpoint, ctx: QContext) -> complex:
    if endpoint == 0:
        return 0.0 + 0j
    q = ctx.q
    abs_q = abs(q)
    total = 0.0 + 0j
    qn = 1.0 + 0j
    recent = deque(maxlen=8)
    for n in range(ctx.max_series_terms):
        value = complex(f(endpoint * qn))
        total += qn * value
        recent.append(abs(value))
        qn *= q
        tail = max(recent) * abs(qn) / (1.0 - abs_q)
        if n >= 7 and tail <= ctx.eps_series * (1.0 + abs(total)):
            return total
    raise ConvergenceError("Jackson ladder sum did not meet its tail bound")


def weight_omega_beta(theta, beta, q, ctx: QContext | None = None):
    """One-parameter circle weight

        (e^{2i theta}, e^{-2i theta}; q)_inf / (beta e^{2i theta}, beta e^{-2i theta}; q)_inf,

    real and nonnegative on the circle for real beta, |beta| < 1.  `theta`
    may be an array.
    """
    return weight_omega_ab(theta, beta, beta, q, ctx)


def weight_omega_ab(theta, alpha, beta, q, ctx: QContext | None = None):
    """Two-parameter (generally complex) circle weight

        (e^{2i theta}, e^{-2i theta}; q)_inf / (alpha e^{2i theta}, beta e^{-2i theta}; q)_inf.
    """
    c = context_for(q, ctx)
    plus = np.exp(2j * np.asarray(theta))
    minus = np.exp(-2j * np.asarray(theta))
    value = (qpoch_infinite(plus, c) * qpoch_infinite(minus, c)
             / (qpoch_infinite(alpha * plus, c) * qpoch_infinite(beta * minus, c)))
    return complex(value) if np.ndim(theta) == 0 else value


class WeightKind(enum.Enum):
    OMEGA_BETA = "omega_beta"
    OMEGA_AB = "omega_ab"


@dataclass(frozen=True)
class WeightSpec:
    """A weight function choice; callable on theta.

    Parameter moduli below 1 keep the denominator products away from zero
    everywhere on the circle.
    """

    kind: WeightKind
    q: complex
    beta: complex
    alpha: complex | None = None

    def __post_init__(self) -> None:
        if abs(self.beta) >= 1.0:
            raise DomainError("weight parameter beta must satisfy |beta| < 1")
        if self.kind is WeightKind.OMEGA_AB:
            if self.alpha is None:
                raise DomainError("OMEGA_AB needs alpha")
            if abs(self.alpha) >= 1.0:
                raise DomainError("weight parameter alpha must satisfy |alpha| < 1")
        elif self.alpha is not None:
            raise DomainError("OMEGA_BETA takes no alpha")

    def __call__(self, theta, ctx: QContext | None = None):
        if self.kind is WeightKind.OMEGA_BETA:
            return weight_omega_beta(theta, self.beta, self.q, ctx)
        return weight_omega_ab(theta, self.alpha, self.beta, self.q, ctx)
