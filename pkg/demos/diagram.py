#!/usr/bin/env python3
"""
Branch diagram of S^2 x S^2: sigma_ij(lambda) sampled on a grid and
written as CSV, plus a quick text summary of where each branch changes sign.
"""

import csv
import io
from fractions import Fraction

import numpy as np

from yamabif import make_family, sphere_spectrum
from yamabif.report import diagram_csv

s = sphere_spectrum(2, 4)
text = diagram_csv(make_family(s, s), Fraction(1, 10), 3, samples=60, branch_cap=3)
rows = list(csv.DictReader(io.StringIO(text)))
print(text.splitlines()[0])
print(f"{len(rows)} rows")

for key in sorted({(r["i"], r["j"]) for r in rows}):
    lam = np.array([float(r["lambda"]) for r in rows if (r["i"], r["j"]) == key])
    sigma = np.array([float(r["sigma"]) for r in rows if (r["i"], r["j"]) == key])
    flips = np.nonzero(np.sign(sigma[1:]) != np.sign(sigma[:-1]))[0]
    where = ", ".join(f"{lam[k]:.3f}..{lam[k + 1]:.3f}" for k in flips) or "none"
    print(f"branch {key}: sign change in {where}")
