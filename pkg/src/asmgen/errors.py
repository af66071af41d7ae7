"""Exception types raised across the package."""


class AsmGenError(Exception):
    """Base class for every error raised by this package."""


class InexactDivision(AsmGenError, ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


class NonSquare(AsmGenError, ValueError):
    """A determinant was requested for a non-square matrix."""


class DivisionByZero(AsmGenError, ZeroDivisionError):
    """Division by the zero element of a ring or field."""


class NotAlternating(AsmGenError, ValueError):
    """A matrix fails the alternating-sign conditions."""


class InvalidConfig(AsmGenError, ValueError):
    """A six-vertex vertex-type matrix has inconsistent arrows."""


class IndexOutOfRange(AsmGenError, IndexError):
    """A coefficient index lies outside the admissible range."""


class DistinctnessViolated(AsmGenError, ValueError):
    """Point evaluation needs pairwise distinct values."""


class SingularCondensation(AsmGenError, ArithmeticError):
    """A central minor vanished during Dodgson condensation."""


class DegeneratePoint(AsmGenError, ValueError):
    """A spectral point makes a weight or a Vandermonde factor vanish."""


class ConfigError(AsmGenError, ValueError):
    """Invalid command-line or run configuration."""


class CacheCorrupt(AsmGenError, RuntimeError):
    """A cached table entry failed its spot check."""
