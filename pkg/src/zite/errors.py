"""Exception hierarchy shared by all solver modules."""


class ZiteError(Exception):
    """Base class for every error raised by this package."""


class RangeError(ZiteError, ValueError):
    """Order or argument outside the supported evaluation range."""


class BracketingError(ZiteError, RuntimeError):
    """No sign change found where a root was required."""


class PositivityError(ZiteError, ValueError):
    """A coefficient evaluated to a non-positive value."""


class HermitianDefectError(ZiteError, RuntimeError):
    """An assembled matrix is too far from Hermitian to symmetrize safely."""


class NotPositiveDefiniteError(ZiteError, RuntimeError):
    """Cholesky factorization hit a non-positive pivot."""


class ConvergenceError(ZiteError, RuntimeError):
    """An iterative method exhausted its iteration budget."""


class ReconstructionError(ZiteError, ValueError):
    """Inverse-spectral fit cannot produce an in-range estimate."""


class ConfigError(ZiteError, ValueError):
    """Malformed or invalid run configuration."""
