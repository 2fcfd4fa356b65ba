from fractions import Fraction

import pytest
from hypothesis import given, settings

from yamabif.errors import DimensionError
from yamabif.family import BranchKind, branch_classify, kappa_lambda, make_family, sigma_eval
from yamabif.spectra import sphere_spectrum

from conftest import degenerate_pair, synthetic
from strategies import families, lambdas

S2 = sphere_spectrum(2, 12)


def test_sphere_pair_stars():
    fam = make_family(S2, S2)
    assert (fam.m, fam.i_star, fam.j_star, fam.degenerate_pair) == (4, 1, 1, False)
    # rho_1 = 2 is strictly above the threshold 2/3
    assert fam.factor0.eigenvalues[1] > fam.threshold0 == Fraction(2, 3)


def test_negative_curvature_star_is_zero():
    fam = make_family(synthetic("H", 2, -6, [0, 1, 3]), S2)
    assert fam.i_star == 0
    assert not fam.degenerate_pair


def test_degenerate_pair_detected():
    fam = degenerate_pair()
    assert (fam.i_star, fam.j_star, fam.degenerate_pair) == (2, 1, True)
    assert fam.factor0.eigenvalues[2] == fam.threshold0
    assert fam.factor1.eigenvalues[1] == fam.threshold1


def test_two_flat_factors_are_not_degenerate():
    fam = make_family(synthetic("T0", 2, 0, [0, 1, 4]), synthetic("T1", 1, 0, [0, 1, 4]))
    assert (fam.i_star, fam.j_star, fam.degenerate_pair) == (0, 0, False)


def test_flat_factor_with_tuned_partner_is_degenerate():
    # kappa0 = 0 and rho1_1 = kappa1/(m-1) = 3: sigma_{0,1} vanishes identically
    fam = make_family(synthetic("T", 2, 0, [0, 1, 4]), synthetic("P", 2, 9, [0, 3, 8]))
    assert (fam.i_star, fam.j_star, fam.degenerate_pair) == (0, 1, True)


def test_star_beyond_truncation():
    fam = make_family(synthetic("short", 2, 30, [0, 1, 2]), S2)
    assert fam.i_star is None
    assert not fam.degenerate_pair


def test_dimension_below_three_rejected():
    circle = synthetic("S1", 1, 0, [0, 1, 4], [1, 2, 2])
    with pytest.raises(DimensionError):
        make_family(circle, circle)


@pytest.mark.parametrize(
    "fam,lam,expected",
    [
        (make_family(S2, S2), 1, 4),
        (make_family(S2, S2), Fraction(1, 2), 6),
        (make_family(synthetic("T", 2, 0, [0, 1]), S2), 4, Fraction(1, 2)),
    ],
)
def test_kappa_lambda(fam, lam, expected):
    assert kappa_lambda(fam, lam) == expected


@pytest.mark.parametrize("lam", [0, -1, Fraction(-1, 2)])
def test_kappa_lambda_rejects_nonpositive(lam):
    with pytest.raises(ValueError):
        kappa_lambda(make_family(S2, S2), lam)


@pytest.mark.parametrize(
    "i,j,lam,expected",
    [(1, 0, 1, Fraction(2, 3)), (1, 0, Fraction(1, 2), 0), (0, 0, 1, Fraction(-4, 3))],
)
def test_sigma_eval(i, j, lam, expected):
    assert sigma_eval(make_family(S2, S2), i, j, lam) == expected


def test_sigma_eval_out_of_range():
    with pytest.raises(IndexError):
        sigma_eval(make_family(S2, S2), 12, 0, 1)


@pytest.mark.parametrize(
    "i,j,kind,zero,mult",
    [
        (1, 0, BranchKind.INCREASING_WITH_ZERO, Fraction(1, 2), 3),
        (0, 1, BranchKind.DECREASING_WITH_ZERO, Fraction(2), 3),
        (1, 1, BranchKind.DECREASING_NO_ZERO, None, 9),
    ],
)
def test_branch_classify_examples(i, j, kind, zero, mult):
    bc = branch_classify(make_family(S2, S2), i, j)
    assert (bc.kind, bc.zero, bc.multiplicity) == (kind, zero, mult)


def test_branch_classify_coefficients():
    bc = branch_classify(make_family(S2, S2), 1, 0)
    assert (bc.A, bc.B) == (Fraction(4, 3), Fraction(-2, 3))


def test_branch_classify_refuses_constants():
    with pytest.raises(ValueError):
        branch_classify(make_family(S2, S2), 0, 0)


def test_degenerate_pair_has_constant_zero_branch():
    fam = degenerate_pair()
    assert branch_classify(fam, fam.i_star, fam.j_star).kind is BranchKind.CONSTANT_ZERO
    for lam in (Fraction(1, 7), 1, 5):
        assert sigma_eval(fam, fam.i_star, fam.j_star, lam) == 0


@settings(max_examples=150, deadline=None)
@given(families(nondegenerate=False))
def test_kind_matches_sign_of_b_and_zero_rule(fam):
    for i, j in fam.pairs():
        bc = branch_classify(fam, i, j)
        if bc.B < 0:
            assert bc.kind in (BranchKind.INCREASING_WITH_ZERO, BranchKind.INCREASING_NO_ZERO)
        elif bc.B > 0:
            assert bc.kind in (BranchKind.DECREASING_WITH_ZERO, BranchKind.DECREASING_NO_ZERO)
        else:
            assert bc.kind in (BranchKind.CONSTANT_ZERO, BranchKind.CONSTANT_NONZERO)
        opposite = bc.A != 0 and bc.B != 0 and (bc.A > 0) != (bc.B > 0)
        assert (bc.zero is not None) == opposite == bc.kind.has_zero
        if bc.zero is not None:
            assert bc.zero > 0
            assert sigma_eval(fam, i, j, bc.zero) == 0
            # single sign change: opposite signs on either side of the zero
            assert sigma_eval(fam, i, j, bc.zero / 2) * sigma_eval(fam, i, j, bc.zero * 2) < 0
        assert (bc.kind is BranchKind.CONSTANT_ZERO) == (bc.A == 0 and bc.B == 0)
        if bc.kind is BranchKind.CONSTANT_ZERO:
            assert fam.degenerate_pair


@settings(max_examples=150, deadline=None)
@given(families(nondegenerate=False), lambdas, lambdas)
def test_two_point_evaluation_recovers_coefficients(fam, l1, l2):
    if l1 == l2:
        l2 = l1 + 1
    for i, j in fam.pairs():
        s1, s2 = sigma_eval(fam, i, j, l1), sigma_eval(fam, i, j, l2)
        # solve A + B/l = s at two points
        B = (s1 - s2) / (1 / l1 - 1 / l2)
        A = s1 - B / l1
        bc = branch_classify(fam, i, j)
        assert (A, B) == (bc.A, bc.B)


@settings(max_examples=150, deadline=None)
@given(families())
def test_at_most_one_vanishing_branch_per_row_and_column(fam):
    zeros = {branch_classify(fam, i, j).zero for i, j in fam.pairs()} - {None}
    for lam in zeros:
        hits = [(i, j) for i, j in fam.pairs() if sigma_eval(fam, i, j, lam) == 0]
        assert len({i for i, _ in hits}) == len(hits)
        assert len({j for _, j in hits}) == len(hits)


@settings(max_examples=200, deadline=None)
@given(families(positive=True))
def test_zero_existence_off_the_star_indices(fam):
    if fam.i_star is None or fam.j_star is None:
        return
    for i, j in fam.pairs():
        if i == fam.i_star or j == fam.j_star:
            continue
        expected = (i > fam.i_star and j < fam.j_star) or (i < fam.i_star and j > fam.j_star)
        bc = branch_classify(fam, i, j)
        assert (bc.zero is not None) == expected
        if expected:
            increasing = bc.kind is BranchKind.INCREASING_WITH_ZERO
            assert increasing == (j < fam.j_star)


@settings(max_examples=100, deadline=None)
@given(families(positive=True))
def test_star_rows_and_columns(fam):
    """Zeros on the row i* and the column j* follow the equality/strict split."""
    if fam.i_star is None or fam.j_star is None:
        return
    for j in range(len(fam.B)):
        if (fam.i_star, j) == (0, 0):
            continue
        bc = branch_classify(fam, fam.i_star, j)
        if fam.A[fam.i_star] == 0:
            assert bc.zero is None
        elif j != fam.j_star:
            assert (bc.zero is not None) == (j < fam.j_star)
    for i in range(len(fam.A)):
        if (i, fam.j_star) == (0, 0):
            continue
        bc = branch_classify(fam, i, fam.j_star)
        if fam.B[fam.j_star] == 0:
            assert bc.zero is None
        elif i != fam.i_star:
            assert (bc.zero is not None) == (i < fam.i_star)
