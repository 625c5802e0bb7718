"""Exception types shared across the package."""


class HzetaError(Exception):
    """Base class for all computation failures raised by this package."""


class ArgumentTooSmall(HzetaError):
    """The truncated tail is not trustworthy at this argument; shift first."""


class ParameterSearchFailed(HzetaError):
    """No (trial argument, tail length) pair met the requested error bound."""


class NonConvergent(HzetaError):
    """Quadrature levels stopped contracting before reaching the target."""
