import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import dense, det_i_minus_t_times, gauss_det, poly_mul, random_rat_matrix
from zetawalk import (
    Poly,
    RatMatrix,
    arc_space,
    cycle_graph,
    det_i_minus_u,
    det_matrix_polynomial,
    log_series,
    one_minus_u_squared_pow,
    shift,
)


def test_poly_trims_trailing_zeros_and_reports_degree():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert Poly.zero().degree == -1
    assert not Poly.zero()
    assert Poly.one().coeffs == (Fraction(1),)
    assert Poly.variable().coeffs == (Fraction(0), Fraction(1))


def test_poly_arithmetic_identities():
    u = Poly.variable()
    one = Poly.one()
    p = one - u * u
    assert (p * p).coeffs == (1, 0, -2, 0, 1)
    assert p**2 == p * p
    assert p**0 == one
    assert p * Poly.zero() == Poly.zero()
    assert (p - p).is_zero()
    assert (2 * p).coeffs == (2, 0, -2)
    assert p[1] == 0 and p[99] == 0


def test_poly_negative_power_rejected():
    with pytest.raises(ValueError):
        Poly([1, 1]) ** -1


def test_poly_evaluation_and_derivative():
    p = Poly([1, -3, 2])  # (1 - u)(1 - 2u)
    assert p.eval_exact(Fraction(1, 2)) == 0
    assert p.eval_exact(1) == 0
    assert p.eval_exact(Fraction(1, 3)) == Fraction(2, 9)
    assert p.eval_float(0.0) == 1.0
    assert p.derivative().coeffs == (-3, 4)


def test_one_minus_u_squared_pow():
    assert one_minus_u_squared_pow(0) == Poly.one()
    assert one_minus_u_squared_pow(1).coeffs == (1, 0, -1)
    assert one_minus_u_squared_pow(3).coeffs == (1, 0, -3, 0, 3, 0, -1)


def test_det_i_minus_u_of_zero_matrix_is_one():
    assert det_i_minus_u(RatMatrix.zeros(4, 4)) == Poly.one()


def test_det_i_minus_u_requires_square():
    with pytest.raises(ValueError):
        det_i_minus_u(RatMatrix.zeros(2, 3))


def test_det_i_minus_u_of_cycle_shift():
    # The flip-flop shift on C3 is three disjoint swaps.
    arcs = arc_space(cycle_graph(3))
    assert det_i_minus_u(shift(arcs)) == one_minus_u_squared_pow(3)


def test_det_i_minus_u_constant_term_is_one():
    rng = random.Random(7)
    for n in (1, 2, 5):
        p = det_i_minus_u(random_rat_matrix(rng, n))
        assert p[0] == 1


def test_det_i_minus_u_cross_checked_by_gaussian_elimination():
    rng = random.Random(11)
    points = [Fraction(0), Fraction(1, 3), Fraction(-2, 5), Fraction(7)]
    for n in (2, 3, 4, 5):
        m = random_rat_matrix(rng, n)
        p = det_i_minus_u(m)
        for t in points:
            assert p.eval_exact(t) == det_i_minus_t_times(m, t)


def test_det_i_minus_u_invariant_under_simultaneous_permutation():
    rng = random.Random(3)
    n = 5
    m = random_rat_matrix(rng, n)
    perm = list(range(n))
    rng.shuffle(perm)
    conjugated = RatMatrix(
        n, n, ((perm[i], perm[j], v) for i, j, v in m.nonzero_items())
    )
    assert det_i_minus_u(m) == det_i_minus_u(conjugated)


def test_det_i_minus_u_multiplies_over_block_diagonal():
    rng = random.Random(5)
    a = random_rat_matrix(rng, 3)
    b = random_rat_matrix(rng, 2)
    combined = RatMatrix(5, 5)
    entries = list(a.nonzero_items()) + [(i + 3, j + 3, v) for i, j, v in b.nonzero_items()]
    combined = RatMatrix(5, 5, entries)
    product = Poly(poly_mul(list(det_i_minus_u(a).coeffs), list(det_i_minus_u(b).coeffs)))
    assert det_i_minus_u(combined) == product


def test_det_workers_do_not_change_the_result():
    rng = random.Random(13)
    m = random_rat_matrix(rng, 6)
    assert det_i_minus_u(m, workers=2) == det_i_minus_u(m, workers=1)


def test_det_matrix_polynomial_quadratic_pencil():
    rng = random.Random(17)
    blocks = [RatMatrix.identity(4), random_rat_matrix(rng, 4), random_rat_matrix(rng, 4)]
    p = det_matrix_polynomial(blocks)
    assert p.degree <= 8
    for t in (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 7)):
        pencil = blocks[0] + blocks[1] * t + blocks[2] * (t * t)
        assert p.eval_exact(t) == gauss_det(dense(pencil))


def test_det_matrix_polynomial_accepts_loose_degree_bound():
    blocks = [RatMatrix.identity(2), RatMatrix.diagonal([Fraction(-1), Fraction(-2)])]
    exact = det_matrix_polynomial(blocks, degree=2)
    padded = det_matrix_polynomial(blocks, degree=6)
    assert exact == padded == Poly([1, -3, 2])


def test_det_matrix_polynomial_rejects_mismatched_blocks():
    with pytest.raises(ValueError):
        det_matrix_polynomial([RatMatrix.identity(2), RatMatrix.identity(3)])


def test_log_series_of_geometric_factor():
    coeffs = log_series(Poly([1, -1]), 6)
    assert coeffs == tuple(Fraction(1, r) for r in range(1, 7))


def test_log_series_of_cycle_zeta_reciprocal():
    # log 1/(1 - u^3)^2 = 2 u^3 + u^6 + (2/3) u^9 + ...
    p = Poly([1, 0, 0, -1]) ** 2
    coeffs = log_series(p, 9)
    expected = [Fraction(0)] * 9
    expected[2] = Fraction(2)
    expected[5] = Fraction(1)
    expected[8] = Fraction(2, 3)
    assert coeffs == tuple(expected)


def test_log_series_edge_cases():
    assert log_series(Poly.one(), 5) == (Fraction(0),) * 5
    assert log_series(Poly([1, -1]), 0) == ()
    with pytest.raises(ValueError):
        log_series(Poly([2, 1]), 3)
    with pytest.raises(ValueError):
        log_series(Poly([1, 1]), -1)


def test_log_series_turns_products_into_sums():
    p = Poly([1, -2, 0, 5])
    q = Poly([1, 3, 1])
    lp = log_series(p, 8)
    lq = log_series(q, 8)
    lpq = log_series(p * q, 8)
    assert lpq == tuple(a + b for a, b in zip(lp, lq))


def test_log_series_recovers_matrix_power_traces():
    # Newton's identities: log det(I - uM)^-1 = sum_r Tr(M^r)/r u^r.
    rng = random.Random(19)
    m = random_rat_matrix(rng, 4)
    coeffs = log_series(det_i_minus_u(m), 6)
    for r in range(1, 7):
        assert coeffs[r - 1] * r == (m**r).trace()


small_ints = st.integers(min_value=-4, max_value=4)


@given(
    st.lists(small_ints, min_size=0, max_size=5),
    st.lists(small_ints, min_size=0, max_size=5),
)
@settings(max_examples=60, deadline=None)
def test_log_series_additivity_property(tail_p, tail_q):
    p = Poly([1] + tail_p)
    q = Poly([1] + tail_q)
    lp = log_series(p, 7)
    lq = log_series(q, 7)
    assert log_series(p * q, 7) == tuple(a + b for a, b in zip(lp, lq))


@given(
    st.lists(
        st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3
    ),
    st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2, 3)]),
)
@settings(max_examples=60, deadline=None)
def test_det_i_minus_u_matches_oracle_property(rows, t):
    m = RatMatrix.from_rows([[Fraction(x) for x in row] for row in rows])
    assert det_i_minus_u(m).eval_exact(t) == det_i_minus_t_times(m, t)
