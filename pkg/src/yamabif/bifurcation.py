"""Degeneracy instants, Morse index, jumps and rigidity intervals.

Instants are zeros ``-B_j/A_i`` of the branches ``A_i + B_j/lambda``;
coincident zeros are grouped by exact rational equality, which is what
makes neutral instants (cancelling contributions) detectable at all.

Index convention: the Morse index counts Jacobi eigenvalues, so the
constant eigenfunction is excluded. The count of Laplacian eigenvalues
below ``kappa_lambda/(m-1)`` is larger by one whenever ``kappa_lambda > 0``;
jumps are identical under both conventions.
"""

from bisect import bisect_left
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from itertools import accumulate

from .errors import ConsistencyError, DegeneratePairError, InstantError, InsufficientTruncationError
from .family import BranchKind, ProductFamily, branch_classify

__all__ = [
    "Classification",
    "Contributor",
    "DegeneracyInstant",
    "RigidityInterval",
    "check_truncation",
    "enumerate_instants",
    "morse_index",
    "classify_instant",
    "rigidity_intervals",
    "all_branch_zeros",
]


class Classification(str, Enum):
    BIFURCATION = "Bifurcation"
    EQUIVARIANT_BIFURCATION = "EquivariantBifurcation"
    NEUTRAL_UNDETERMINED = "NeutralUndetermined"


@dataclass(frozen=True)
class Contributor:
    i: int
    j: int
    multiplicity: int
    kind: BranchKind


@dataclass(frozen=True)
class DegeneracyInstant:
    lam: Fraction
    contributors: tuple
    delta_n: int | None = None
    classification: Classification | None = None


@dataclass(frozen=True)
class RigidityInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty rigidity interval ({self.lo}, {self.hi})")

    def __contains__(self, lam) -> bool:
        return self.lo < lam < self.hi


def _window(lo, hi):
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 < lo < hi:
        raise ValueError(f"window must satisfy 0 < lo < hi, got [{lo}, {hi}]")
    return lo, hi


def check_truncation(fam: ProductFamily, lo, hi) -> None:
    """Raise unless every unlisted branch is positive on ``[lo, hi]``.

    An unlisted branch of factor 0 is bounded below by ``A_last + B_0/lambda``
    and one of factor 1 by ``A_0 + B_last/lambda``. Both bounds are monotone
    in lambda, so nonnegativity at the two endpoints certifies that no
    unlisted branch vanishes (or is negative) anywhere in the window.
    """
    if fam.degenerate_pair:
        raise DegeneratePairError(fam.i_star, fam.j_star)
    th0, th1 = fam.threshold0, fam.threshold1
    need0 = th0 + max(th1 / lo, th1 / hi)
    need1 = th1 + max(th0 * lo, th0 * hi)
    if fam.factor0.eigenvalues[-1] < need0:
        raise InsufficientTruncationError(0, need0, fam.factor0.truncation_count)
    if fam.factor1.eigenvalues[-1] < need1:
        raise InsufficientTruncationError(1, need1, fam.factor1.truncation_count)


def _zero_bearing(fam: ProductFamily):
    """Yield ``(zero, i, j)`` for every listed branch that vanishes somewhere."""
    for i, a in enumerate(fam.A):
        if a == 0:
            continue
        for j, b in enumerate(fam.B):
            if (i or j) and b != 0 and (a > 0) != (b > 0):
                yield -b / a, i, j


def all_branch_zeros(fam: ProductFamily) -> list:
    """Sorted distinct zeros of all listed branches, inside or outside any window."""
    return sorted({z for z, _, _ in _zero_bearing(fam)})


def enumerate_instants(fam: ProductFamily, lo, hi) -> list:
    """All degeneracy instants in the closed window ``[lo, hi]``, ascending.

    Each instant is already classified (see :func:`classify_instant`).
    """
    lo, hi = _window(lo, hi)
    check_truncation(fam, lo, hi)
    groups = {}
    for zero, i, j in _zero_bearing(fam):
        if lo <= zero <= hi:
            groups.setdefault(zero, []).append((i, j))
    zeros = all_branch_zeros(fam)
    instants = []
    for lam in sorted(groups):
        contributors = []
        for i, j in sorted(groups[lam]):
            bc = branch_classify(fam, i, j)
            contributors.append(Contributor(i, j, bc.multiplicity, bc.kind))
        instants.append(classify_instant(fam, DegeneracyInstant(lam, tuple(contributors)), neighbors=zeros))
    return instants


def morse_index(fam: ProductFamily, lam) -> int:
    """Number of negative Jacobi eigenvalues at ``lam``, with multiplicity."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    check_truncation(fam, lam, lam)
    B = fam.B
    cum1 = list(accumulate(fam.factor1.multiplicities, initial=0))
    total = 0
    for i, a in enumerate(fam.A):
        cut = -a * lam
        k = bisect_left(B, cut)
        if k < len(B) and B[k] == cut and (i or k):
            raise InstantError(f"lambda = {lam} is a degeneracy instant (branch ({i}, {k}) vanishes)")
        total += fam.factor0.entries[i].multiplicity * cum1[k]
    if fam.A[0] + fam.B[0] / lam < 0:
        total -= 1
    return total


def _bracket_ratio(lam, neighbors):
    ratio = Fraction(2)
    k = bisect_left(neighbors, lam)
    if k > 0:
        ratio = min(ratio, lam / neighbors[k - 1])
    upper = k + 1 if k < len(neighbors) and neighbors[k] == lam else k
    if upper < len(neighbors):
        ratio = min(ratio, neighbors[upper] / lam)
    return ratio


def classify_instant(fam: ProductFamily, inst: DegeneracyInstant, neighbors=None) -> DegeneracyInstant:
    """Fill in the signed index jump and the classification of ``inst``.

    The jump is the contributor sum (decreasing branches enter the negative
    eigenspace, increasing ones leave it). It is cross-checked against the
    Morse index at ``lam/(1+eps)`` and ``lam*(1+eps)`` where ``eps`` is half
    the relative gap to the nearest other branch zero; the cross-check is
    skipped only when the bracket leaves the truncation-certified range.
    """
    delta = 0
    for c in inst.contributors:
        if c.kind is BranchKind.DECREASING_WITH_ZERO:
            delta += c.multiplicity
        elif c.kind is BranchKind.INCREASING_WITH_ZERO:
            delta -= c.multiplicity
        else:
            raise ValueError(f"contributor ({c.i}, {c.j}) of kind {c.kind.value} has no zero")

    if neighbors is None:
        neighbors = all_branch_zeros(fam)
    eps = (_bracket_ratio(inst.lam, neighbors) - 1) / 2
    below, above = inst.lam / (1 + eps), inst.lam * (1 + eps)
    try:
        two_sided = morse_index(fam, above) - morse_index(fam, below)
    except InsufficientTruncationError:
        two_sided = None
    if two_sided is not None and two_sided != delta:
        raise ConsistencyError(
            f"index jump at lambda = {inst.lam}: contributors give {delta}, Morse index difference {two_sided}"
        )

    if delta != 0:
        cls = Classification.BIFURCATION
    elif not fam.degenerate_pair and (fam.factor0.harmonically_free or fam.factor1.harmonically_free):
        cls = Classification.EQUIVARIANT_BIFURCATION
    else:
        cls = Classification.NEUTRAL_UNDETERMINED
    return replace(inst, delta_n=delta, classification=cls)


def rigidity_intervals(fam: ProductFamily, lo, hi) -> list:
    """Maximal open subintervals of ``(lo, hi)`` free of degeneracy instants."""
    lo, hi = _window(lo, hi)
    cuts = [lo] + [inst.lam for inst in enumerate_instants(fam, lo, hi) if lo < inst.lam < hi] + [hi]
    return [RigidityInterval(a, b) for a, b in zip(cuts, cuts[1:])]
