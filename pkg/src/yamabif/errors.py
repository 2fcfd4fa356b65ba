"""Exception hierarchy shared by every module of the package."""

from fractions import Fraction


class YamabifError(Exception):
    """Base class for all errors raised by this package."""


class SpectrumParseError(YamabifError):
    """A spectrum file or rational literal could not be parsed."""


class SpectrumValidationError(YamabifError):
    """Spectral data violates a structural invariant.

    ``index`` is the offending entry index, or ``None`` when the problem is
    not tied to a single entry.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DimensionError(YamabifError):
    """The product has total dimension below 3."""


class DegeneratePairError(YamabifError):
    """The Jacobi operator is singular for every value of the parameter."""

    def __init__(self, i_star, j_star):
        super().__init__(
            "pair degenerate: equalities hold in both defining inequalities "
            f"(i*={i_star}, j*={j_star}); Jacobi operator degenerate for all lambda"
        )
        self.i_star = i_star
        self.j_star = j_star


class InsufficientTruncationError(YamabifError):
    """A factor spectrum is too short to certify completeness of a result.

    ``threshold`` is the eigenvalue the listed spectrum must reach (or
    exceed); ``needed`` is a lower bound on the number of eigenvalues
    required, refined to the exact count when the factor is a catalog space.
    """

    def __init__(self, factor: int, threshold: Fraction, have: int, needed: int | None = None, reason: str = ""):
        self.factor = factor
        self.threshold = Fraction(threshold)
        self.have = have
        self.needed = have + 1 if needed is None else needed
        self.reason = reason
        super().__init__(self._message())

    def _message(self):
        msg = (
            f"insufficient truncation: factor {self.factor} lists {self.have} eigenvalues "
            f"but must reach an eigenvalue >= {self.threshold}; "
            f"at least {self.needed} eigenvalues required"
        )
        if self.reason:
            msg += f" ({self.reason})"
        return msg

    def with_needed(self, needed: int) -> "InsufficientTruncationError":
        return InsufficientTruncationError(self.factor, self.threshold, self.have, needed, self.reason)


class InstantError(YamabifError):
    """The Morse index was requested at a degeneracy instant."""


class MissingVolumeError(YamabifError):
    """A factor lacks the volume needed for the Yamabe obstruction."""


class ConsistencyError(YamabifError):
    """Two independent computations of the same quantity disagree."""
