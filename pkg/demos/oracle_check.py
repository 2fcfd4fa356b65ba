#!/usr/bin/env python3
"""
Cross-check the exact enumeration against an independent grid scan and a
brute-force Morse index on a batch of random rational families.
"""

import numpy as np

from yamabif import enumerate_instants, morse_index
from yamabif.oracle import brute_morse_index, grid_scan_instants, min_gap, random_family

rng = np.random.default_rng(2026)
agree = 0
for trial in range(25):
    fam, lo, hi = random_family(rng)
    lams = [inst.lam for inst in enumerate_instants(fam, lo, hi)]
    gap = min_gap(lams)
    delta = min(gap / 10, (hi - lo) / 5) if gap else (hi - lo) / 10
    report = grid_scan_instants(fam, lo, hi, delta)
    mid = (lo + hi) / 2
    ok = report.consistent and brute_morse_index(fam, mid) == morse_index(fam, mid)
    agree += ok
    print(f"{trial:2d}  window [{lo}, {hi}]  instants {len(lams):2d}  brackets {len(report.detected):2d}  {'ok' if ok else 'MISMATCH'}")

print(f"{agree}/25 families agree")
