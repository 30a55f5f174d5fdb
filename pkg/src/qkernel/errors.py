"""Exception types shared across the kernel."""


class QKernelError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(QKernelError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PoleError(QKernelError, ZeroDivisionError):
    """Evaluation hit a pole (a vanishing denominator factor)."""


class ConvergenceError(QKernelError, ArithmeticError):
    """An iteration cap was reached before the certified error bound was met."""
