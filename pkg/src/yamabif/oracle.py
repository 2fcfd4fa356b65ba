"""Brute-force verifiers for the bifurcation engine.

Nothing here uses the engine's zero formula. The grid scan evaluates the
sign of every listed branch at every grid point and reports brackets
where a sign change (or an exact zero) occurs; the Morse index oracle
sums multiplicities over all negative branches one pair at a time.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bifurcation import check_truncation, enumerate_instants
from .errors import InstantError
from .family import ProductFamily, make_family, sigma_eval
from .spectra import FactorSpectrum, SpectrumEntry

__all__ = ["GridScanReport", "grid_scan_instants", "brute_morse_index", "random_family", "min_gap"]

_INT64_SAFE = 2**62


@dataclass
class GridScanReport:
    """Sign-change brackets found on a grid of step ``resolution``.

    A bracket ``(a, a)`` marks an exact zero at a grid point; ``(a, b)`` with
    ``a < b`` marks a strict sign change between neighbouring grid points.
    """

    resolution: Fraction
    detected: list
    matched: dict = field(default_factory=dict)
    unmatched_instants: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Every bracket holds exactly one instant and every instant is bracketed."""
        return not self.unmatched_instants and all(len(v) == 1 for v in self.matched.values()) and len(
            self.matched
        ) == len(self.detected)


def _grid_numerators(lo, hi, delta):
    den = math.lcm(lo.denominator, hi.denominator, delta.denominator)
    start, stop, step = int(lo * den), int(hi * den), int(delta * den)
    nums = list(range(start, stop + 1, step))
    if nums[-1] != stop:
        nums.append(stop)
    return nums, den


def grid_scan_instants(fam: ProductFamily, lo, hi, delta) -> GridScanReport:
    lo, hi, delta = Fraction(lo), Fraction(hi), Fraction(delta)
    if not 0 < lo < hi:
        raise ValueError(f"window must satisfy 0 < lo < hi, got [{lo}, {hi}]")
    if not 0 < delta < (hi - lo) / 4:
        raise ValueError(f"resolution {delta} must lie in (0, (hi - lo)/4)")
    check_truncation(fam, lo, hi)

    nums, den = _grid_numerators(lo, hi, delta)
    # sign(A + B/lambda) == sign(A*p + B*den) for lambda = p/den > 0; scale A, B to integers
    scale = math.lcm(*(x.denominator for x in fam.A + fam.B))
    a_int = [int(x * scale) for x in fam.A]
    b_int = [int(x * scale) for x in fam.B]
    bound = max(map(abs, a_int)) * max(nums) + max(map(abs, b_int)) * den
    dtype = np.int64 if bound < _INT64_SAFE else object
    p = np.array(nums, dtype=dtype)

    brackets = set()
    for i, a in enumerate(a_int):
        ap = a * p
        for j, b in enumerate(b_int):
            if i == 0 and j == 0:
                continue
            s = np.sign(ap + b * den).astype(np.int8)
            for k in np.flatnonzero(s == 0):
                g = Fraction(nums[k], den)
                brackets.add((g, g))
            for k in np.flatnonzero(s[:-1] * s[1:] < 0):
                brackets.add((Fraction(nums[k], den), Fraction(nums[k + 1], den)))

    detected = sorted(brackets)
    instants = [inst.lam for inst in enumerate_instants(fam, lo, hi)]
    matched, seen = {}, set()
    for a, b in detected:
        hits = [lam for lam in instants if (lam == a if a == b else a < lam < b)]
        if hits:
            matched[(a, b)] = hits
            seen.update(hits)
    return GridScanReport(delta, detected, matched, [lam for lam in instants if lam not in seen])


def brute_morse_index(fam: ProductFamily, lam) -> int:
    lam = Fraction(lam)
    check_truncation(fam, lam, lam)
    total = 0
    for i, j in fam.pairs():
        value = sigma_eval(fam, i, j, lam)
        if value == 0:
            raise InstantError(f"lambda = {lam} is a degeneracy instant (branch ({i}, {j}))")
        if value < 0:
            total += fam.multiplicity(i, j)
    return total


def min_gap(values) -> Fraction | None:
    values = sorted(values)
    gaps = [b - a for a, b in zip(values, values[1:])]
    return min(gaps) if gaps else None


def _random_factor(rng, name, dim, kappa, max_count):
    count = int(rng.integers(2, max_count + 1))
    rho = [Fraction(0)]
    for _ in range(count - 1):
        rho.append(rho[-1] + Fraction(int(rng.integers(1, 9)), int(rng.choice([1, 2, 3]))))
    entries = [SpectrumEntry(0, rho[0], 1)] + [
        SpectrumEntry(k, r, int(rng.integers(1, 7))) for k, r in enumerate(rho[1:], start=1)
    ]
    return FactorSpectrum(name, dim, kappa, entries, harmonically_free=bool(rng.integers(0, 2)))


def _with_last_at_least(spec, value):
    entries = list(spec.entries)
    last = entries[-1]
    if last.eigenvalue < value:
        entries[-1] = SpectrumEntry(last.index, Fraction(math.ceil(value)) + 1, last.multiplicity)
    return FactorSpectrum(spec.name, spec.dim, spec.scalar_curvature, entries,
                          harmonically_free=spec.harmonically_free)


def random_family(rng, max_count=8):
    """Random nondegenerate family with rational spectra and a window it covers.

    Returns ``(family, lo, hi)``; the listed spectra (at most ``max_count``
    eigenvalues each) are long enough for ``[lo, hi]``.
    """
    while True:
        d0 = int(rng.integers(1, 5))
        d1 = int(rng.integers(max(1, 3 - d0), 5))
        k0 = Fraction(int(rng.integers(-12, 25)), int(rng.choice([1, 2, 3])))
        k1 = Fraction(int(rng.integers(-12, 25)), int(rng.choice([1, 2, 3])))
        lo = Fraction(1, int(rng.integers(2, 9)))
        hi = Fraction(int(rng.integers(2, 9)), 1)
        f0 = _random_factor(rng, "X0", d0, k0, max_count)
        f1 = _random_factor(rng, "X1", d1, k1, max_count)
        th0, th1 = k0 / (d0 + d1 - 1), k1 / (d0 + d1 - 1)
        f0 = _with_last_at_least(f0, th0 + max(th1 / lo, th1 / hi))
        f1 = _with_last_at_least(f1, th1 + max(th0 * lo, th0 * hi))
        fam = make_family(f0, f1)
        if not fam.degenerate_pair:
            return fam, lo, hi
