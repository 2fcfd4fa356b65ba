from fractions import Fraction

import pytest

from yamabif.family import make_family
from yamabif.spectra import FactorSpectrum, SpectrumEntry, sphere_spectrum


def synthetic(name, dim, kappa, rhos, mults=None, **flags):
    rhos = [Fraction(r) for r in rhos]
    mults = mults or [1] + [k + 1 for k in range(1, len(rhos))]
    entries = [SpectrumEntry(k, r, mu) for k, (r, mu) in enumerate(zip(rhos, mults))]
    return FactorSpectrum(name, dim, Fraction(kappa), entries, **flags)


def neutral_pair(harmonically_free=False):
    """Family with an increasing and a decreasing branch vanishing together.

    dims (2, 3), m = 5: thresholds kappa/(m-1) are 1 and 2. Factor 0 has
    A = [-1, 2, 9], so branch (1, 0) vanishes at -B_0/A_1 = 2/2 = 1. The
    partner eigenvalue rho1_1 is solved from B_1/(-A_0) = 1, i.e. B_1 = 1,
    rho1_1 = 3. Both branches carry multiplicity 4.
    """
    th0, th1 = Fraction(1), Fraction(2)
    rho0 = [0, 3, 10]
    A = [Fraction(r) - th0 for r in rho0]
    target = -(0 - th1) / A[1]
    rho1_1 = th1 + target * (-A[0])
    f0 = synthetic("N0", 2, 4, rho0, [1, 4, 2], harmonically_free=harmonically_free)
    f1 = synthetic("N1", 3, 8, [0, rho1_1, 12], [1, 4, 3])
    return make_family(f0, f1), target


def degenerate_pair():
    # m = 4: kappa0/3 = 2 = rho0_2 and kappa1/3 = 3 = rho1_1
    f0 = synthetic("D0", 2, 6, [0, 1, 2, 5])
    f1 = synthetic("D1", 2, 9, [0, 3, 7])
    return make_family(f0, f1)


@pytest.fixture
def s2s2():
    s = sphere_spectrum(2, 12)
    return make_family(s, s)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
