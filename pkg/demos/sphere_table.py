#!/usr/bin/env python3
"""
Degeneracy instants of S^n x S^n, compared against the closed form,
with the index jump and rigidity interval for each n.
"""

from yamabif import enumerate_instants, make_family, sphere_spectrum
from yamabif.sphere_case import closed_form_instant, closed_form_rigidity

for n in (2, 3, 4, 5):
    s = sphere_spectrum(n, 12)
    fam = make_family(s, s)
    lo = closed_form_instant(n, 6) / 2
    print(f"S^{n} x S^{n}, window ({lo}, 1]")
    for inst in enumerate_instants(fam, lo, 1):
        if inst.lam == lo:
            continue
        print(f"  lambda = {str(inst.lam):>8}  delta_n = {inst.delta_n:4d}  {inst.classification.value}")
    rig = closed_form_rigidity(n)
    print(f"  rigid on ({rig.lo}, {rig.hi}); lambda_1 = {closed_form_instant(n, 1)}")
    # the interval really is instant-free
    assert not [i for i in enumerate_instants(fam, rig.lo, rig.hi) if i.lam in rig]
    print()

