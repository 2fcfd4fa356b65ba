#!/usr/bin/env python3
"""
Nonpositive curvature. Two nonpositive factors give no instants at all.
A flat factor against S^2 gives only increasing branches, so the index
can only drop as lambda grows.
"""

from fractions import Fraction

from yamabif import FactorSpectrum, SpectrumEntry, enumerate_instants, make_family, morse_index, sphere_spectrum


def factor(name, dim, kappa, rhos):
    entries = [SpectrumEntry(k, Fraction(r), 1 if k == 0 else 2) for k, r in enumerate(rhos)]
    return FactorSpectrum(name, dim, Fraction(kappa), entries)


lo, hi = Fraction(1, 1000), Fraction(1000)

hyp = make_family(factor("H0", 2, -6, [0, 1, 3, 7]), factor("H1", 3, -2, [0, Fraction(1, 2), 5]))
print("both nonpositive:", enumerate_instants(hyp, lo, hi))

flat = make_family(factor("T2", 2, 0, [k * k for k in range(27)]), sphere_spectrum(2, 4))
instants = enumerate_instants(flat, lo, hi)
print(f"flat x S^2: {len(instants)} instants")
cuts = [lo] + [i.lam for i in instants] + [hi]
for a, b in zip(cuts, cuts[1:]):
    mid = (a + b) / 2
    print(f"  ({float(a):.4g}, {float(b):.4g})  index {morse_index(flat, mid)}")
