#!/usr/bin/env python3
"""
A neutral instant: an increasing and a decreasing branch cross zero at the
same lambda with equal multiplicity, so the Morse index does not jump.
Marking a factor harmonically free upgrades it to an equivariant bifurcation.
"""

from fractions import Fraction

from yamabif import FactorSpectrum, SpectrumEntry, enumerate_instants, make_family, morse_index


def factor(name, dim, kappa, rhos, mults, **flags):
    entries = [SpectrumEntry(k, Fraction(r), mu) for k, (r, mu) in enumerate(zip(rhos, mults))]
    return FactorSpectrum(name, dim, Fraction(kappa), entries, **flags)


# m = 5, thresholds kappa/(m-1) are 1 and 2; branches (1, 0) and (0, 1) both vanish at 1
for free in (False, True):
    f0 = factor("N0", 2, 4, [0, 3, 10], [1, 4, 2], harmonically_free=free)
    f1 = factor("N1", 3, 8, [0, 3, 12], [1, 4, 3])
    fam = make_family(f0, f1)
    for inst in enumerate_instants(fam, Fraction(1, 2), 2):
        print(f"harmonically_free={free}: lambda = {inst.lam}, delta_n = {inst.delta_n}, {inst.classification.value}")
        for c in inst.contributors:
            print(f"    branch ({c.i}, {c.j})  x{c.multiplicity}  {c.kind.value}")

print("index at 9/10 and 11/10:", morse_index(fam, Fraction(9, 10)), morse_index(fam, Fraction(11, 10)))
