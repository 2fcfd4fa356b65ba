"""Algebra of the product family ``g0 + lambda * g1``.

Every eigenvalue branch of the Jacobi operator has the form
``sigma_ij(lambda) = A_i + B_j / lambda`` with

    A_i = rho0_i - kappa0 / (m - 1),    B_j = rho1_j - kappa1 / (m - 1),

so monotonicity and the (at most one) zero of a branch are read off from
the signs of ``A_i`` and ``B_j``. All arithmetic is exact.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import DimensionError
from .spectra import FactorSpectrum

__all__ = ["BranchKind", "BranchClass", "ProductFamily", "make_family", "kappa_lambda", "sigma_eval", "branch_classify"]


class BranchKind(str, Enum):
    INCREASING_WITH_ZERO = "IncreasingWithZero"
    DECREASING_WITH_ZERO = "DecreasingWithZero"
    INCREASING_NO_ZERO = "IncreasingNoZero"
    DECREASING_NO_ZERO = "DecreasingNoZero"
    CONSTANT_ZERO = "ConstantZero"
    CONSTANT_NONZERO = "ConstantNonzero"

    @property
    def has_zero(self) -> bool:
        return self in (BranchKind.INCREASING_WITH_ZERO, BranchKind.DECREASING_WITH_ZERO)


@dataclass(frozen=True)
class BranchClass:
    i: int
    j: int
    A: Fraction
    B: Fraction
    multiplicity: int
    kind: BranchKind
    zero: Fraction | None = None


def _star_index(coeffs):
    for k, c in enumerate(coeffs):
        if c >= 0:
            return k
    return None


@dataclass(frozen=True)
class ProductFamily:
    """The pair of factors together with the derived branch coefficients.

    ``i_star``/``j_star`` are ``None`` when the listed spectrum never reaches
    ``kappa/(m-1)`` ("beyond truncation").
    """

    factor0: FactorSpectrum
    factor1: FactorSpectrum
    m: int = field(init=False)
    A: tuple = field(init=False, repr=False)
    B: tuple = field(init=False, repr=False)
    i_star: int | None = field(init=False)
    j_star: int | None = field(init=False)
    degenerate_pair: bool = field(init=False)

    def __post_init__(self):
        m = self.factor0.dim + self.factor1.dim
        if m < 3:
            raise DimensionError(f"product dimension m = {m} < 3")
        A = tuple(r - self.factor0.scalar_curvature / (m - 1) for r in self.factor0.eigenvalues)
        B = tuple(r - self.factor1.scalar_curvature / (m - 1) for r in self.factor1.eigenvalues)
        i_star, j_star = _star_index(A), _star_index(B)
        # (0, 0) is the constant eigenfunction, not part of the Jacobi spectrum
        degenerate = (
            i_star is not None and j_star is not None and (i_star, j_star) != (0, 0)
            and A[i_star] == 0 and B[j_star] == 0
        )
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "i_star", i_star)
        object.__setattr__(self, "j_star", j_star)
        object.__setattr__(self, "degenerate_pair", degenerate)

    @property
    def threshold0(self) -> Fraction:
        return self.factor0.scalar_curvature / (self.m - 1)

    @property
    def threshold1(self) -> Fraction:
        return self.factor1.scalar_curvature / (self.m - 1)

    def multiplicity(self, i: int, j: int) -> int:
        return self.factor0.entries[i].multiplicity * self.factor1.entries[j].multiplicity

    def pairs(self):
        """All truncated index pairs except the constant one ``(0, 0)``."""
        for i in range(len(self.A)):
            for j in range(len(self.B)):
                if i or j:
                    yield i, j

    def swapped(self) -> "ProductFamily":
        return ProductFamily(self.factor1, self.factor0)


def make_family(f0: FactorSpectrum, f1: FactorSpectrum) -> ProductFamily:
    return ProductFamily(f0, f1)


def _positive(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    return lam


def _check_indices(fam, i, j):
    if not (0 <= i < len(fam.A)) or not (0 <= j < len(fam.B)):
        raise IndexError(
            f"branch ({i}, {j}) outside truncation ({len(fam.A)} x {len(fam.B)} eigenvalues)"
        )


def kappa_lambda(fam: ProductFamily, lam) -> Fraction:
    """Scalar curvature of ``g_lambda``."""
    lam = _positive(lam)
    return fam.factor0.scalar_curvature + fam.factor1.scalar_curvature / lam


def sigma_eval(fam: ProductFamily, i: int, j: int, lam) -> Fraction:
    """Jacobi eigenvalue ``sigma_ij(lambda)``.

    ``(0, 0)`` is accepted and returns ``-kappa_lambda/(m-1)``, although that
    value is not part of the Jacobi spectrum.
    """
    lam = _positive(lam)
    _check_indices(fam, i, j)
    rho0 = fam.factor0.entries[i].eigenvalue
    rho1 = fam.factor1.entries[j].eigenvalue
    return rho0 + rho1 / lam - kappa_lambda(fam, lam) / (fam.m - 1)


def branch_classify(fam: ProductFamily, i: int, j: int) -> BranchClass:
    if i == 0 and j == 0:
        raise ValueError("branch (0, 0) corresponds to constant functions and is excluded")
    _check_indices(fam, i, j)
    a, b = fam.A[i], fam.B[j]
    zero = None
    if b == 0:
        kind = BranchKind.CONSTANT_ZERO if a == 0 else BranchKind.CONSTANT_NONZERO
    else:
        has_zero = a != 0 and (a > 0) != (b > 0)
        if has_zero:
            zero = -b / a
        if b < 0:
            kind = BranchKind.INCREASING_WITH_ZERO if has_zero else BranchKind.INCREASING_NO_ZERO
        else:
            kind = BranchKind.DECREASING_WITH_ZERO if has_zero else BranchKind.DECREASING_NO_ZERO
    return BranchClass(i, j, a, b, fam.multiplicity(i, j), kind, zero)
