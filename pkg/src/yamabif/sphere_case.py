"""Closed forms for ``S^n x S^n`` and the non-Yamabe certificate.

The certificate is the only floating-point computation in the package. It
compares the volume-normalised scalar curvature ``kappa_lambda * V^(2/m)``
of ``g_lambda`` with the Yamabe invariant of the round ``m``-sphere; when the
former is larger, ``g_lambda`` cannot be a Yamabe metric.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .bifurcation import Classification, RigidityInterval, enumerate_instants
from .errors import MissingVolumeError
from .family import ProductFamily, kappa_lambda, make_family
from .spectra import harmonic_dim, sphere_spectrum, sphere_volume

__all__ = [
    "ObstructionResult",
    "closed_form_instant",
    "closed_form_rigidity",
    "crosscheck_sphere",
    "sphere_yamabe_invariant",
    "yamabe_obstruction",
    "RELATIVE_TOLERANCE",
    "MARGIN_FRACTION",
]

RELATIVE_TOLERANCE = 1e-9
MARGIN_FRACTION = 1e-6


def closed_form_instant(n: int, i: int) -> Fraction:
    """Zero of the branch ``(i, 0)`` of ``S^n x S^n``."""
    if n < 2 or i < 1:
        raise ValueError(f"need n >= 2 and i >= 1, got n={n}, i={i}")
    return Fraction(n * (n - 1), i * (i + n - 1) * (2 * n - 1) - n * (n - 1))


def closed_form_rigidity(n: int) -> RigidityInterval:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return RigidityInterval(Fraction(n - 1, n), Fraction(n, n - 1))


def crosscheck_sphere(n: int, count: int, lo=None) -> bool:
    """Compare the generic engine with the closed form on ``[lo, 1]``.

    ``lo`` defaults to the smallest closed-form instant whose branch is listed,
    ``closed_form_instant(n, count - 1)``. Too short a spectrum raises
    :class:`~yamabif.errors.InsufficientTruncationError`.
    """
    fam = make_family(sphere_spectrum(n, count), sphere_spectrum(n, count))
    if lo is None:
        lo = closed_form_instant(n, count - 1) if count >= 2 else Fraction(1, 2)
    lo = Fraction(lo)
    instants = enumerate_instants(fam, lo, 1)
    expected = {}
    i = 1
    while (lam := closed_form_instant(n, i)) >= lo:
        if lam <= 1:
            expected[lam] = harmonic_dim(n, i)
        i += 1
    if [inst.lam for inst in instants] != sorted(expected):
        return False
    ok_classes = (Classification.BIFURCATION, Classification.EQUIVARIANT_BIFURCATION)
    for inst in instants:
        if sum(c.multiplicity for c in inst.contributors) != expected[inst.lam]:
            return False
        if inst.classification not in ok_classes:
            return False
    return True


def sphere_yamabe_invariant(m: int) -> float:
    """``m(m-1) * vol(S^m)^(2/m)`` for the unit round sphere."""
    return m * (m - 1) * sphere_volume(m) ** (2.0 / m)


@dataclass(frozen=True)
class ObstructionResult:
    lam: Fraction
    normalized_scalar: float
    sphere_yamabe: float
    certified_not_yamabe: bool
    margin: float


def yamabe_obstruction(fam: ProductFamily, lam) -> ObstructionResult:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    for k, factor in enumerate((fam.factor0, fam.factor1)):
        if factor.volume is None:
            raise MissingVolumeError(f"factor {k} ({factor.name}) has no volume; obstruction needs both volumes")
    m, m1 = fam.m, fam.factor1.dim
    volume = fam.factor0.volume * fam.factor1.volume * float(lam) ** (m1 / 2)
    normalized = float(kappa_lambda(fam, lam)) * volume ** (2.0 / m)
    threshold = sphere_yamabe_invariant(m)
    margin = normalized - threshold
    return ObstructionResult(
        lam=lam,
        normalized_scalar=normalized,
        sphere_yamabe=threshold,
        certified_not_yamabe=margin > MARGIN_FRACTION * threshold,
        margin=margin,
    )
