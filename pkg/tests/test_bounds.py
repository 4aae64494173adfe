"""The u(n,k) bound calculus: divisors, hull, monotonicity, submultiplicativity."""

from fractions import Fraction

import pytest

from fourier_uncertainty.bounds import (
    divisors,
    hull_points,
    nearest_divisors,
    submult_check,
    submult_traces,
    theta_lower,
    u_bound,
)


def test_nearest_divisors_examples():
    p = nearest_divisors(6, 4)
    assert (p.d1, p.d2) == (3, 6)
    p = nearest_divisors(7, 3)
    assert (p.d1, p.d2) == (1, 7)
    p = nearest_divisors(12, 6)
    assert (p.d1, p.d2) == (6, 6)
    p = nearest_divisors(12, Fraction(7, 2))
    assert (p.d1, p.d2) == (3, 4)


def test_nearest_divisors_domain():
    with pytest.raises(ValueError):
        nearest_divisors(6, 0)
    with pytest.raises(ValueError):
        nearest_divisors(6, 7)


def test_u_bound_examples():
    assert u_bound(7, 3).value == Fraction(5)  # p + 1 - k on a prime
    assert u_bound(6, 3).value == Fraction(2)  # n/d at a divisor
    b = u_bound(6, 4)
    assert b.value == Fraction(5, 3)
    assert b.ceiling == 2


def test_u_equals_n_over_d_at_divisors():
    for n in [6, 12, 30, 64, 97]:
        for d in divisors(n):
            assert u_bound(n, d).value == Fraction(n, d)


def test_u_accepts_rational_k():
    assert u_bound(12, Fraction(9, 2)).value == Fraction(12, 24) * (4 + 6 - Fraction(9, 2))


def test_theta_lower_examples():
    assert theta_lower(5, 2) == 4
    assert theta_lower(4, 3) == 2  # u = 3/2
    assert theta_lower(6, 6) == 1


def test_hull_examples():
    h = hull_points(6)
    assert h.vertices == ((1, 6), (2, 3), (3, 2), (6, 1))
    h7 = hull_points(7)
    assert h7.vertices == ((1, 7), (7, 1))
    for k in range(1, 8):
        assert h7.evaluate(k) == 7 + 1 - k  # prime hull interpolates p + 1 - k
    assert hull_points(12).evaluate(5) == Fraction(5, 2)


def test_hull_single_vertex():
    h = hull_points(1)
    assert h.vertices == ((1, 1),)
    assert h.evaluate(1) == 1


def test_polyline_identity_all_n_up_to_200():
    for n in range(1, 201):
        h = hull_points(n)
        for k in range(1, n + 1):
            assert h.evaluate(k) == u_bound(n, k).value


def test_u_nonincreasing_in_k():
    for n in [2, 6, 12, 36, 60, 97, 128, 180]:
        values = [u_bound(n, k).value for k in range(1, n + 1)]
        assert all(a >= b for a, b in zip(values, values[1:]))
        # also across divisor breakpoints at half-integer k
        for k in range(1, n):
            assert u_bound(n, k).value >= u_bound(n, Fraction(2 * k + 1, 2)).value


def test_hull_slopes_nondecreasing():
    for n in [6, 12, 30, 60, 96, 180]:
        h = hull_points(n)
        slopes = [
            Fraction(y2 - y1, x2 - x1) for (x1, y1), (x2, y2) in h.segments
        ]
        assert all(s1 <= s2 for s1, s2 in zip(slopes, slopes[1:]))
        # each slope is -n/(d1 d2)
        for (x1, y1), (x2, y2) in h.segments:
            assert Fraction(y2 - y1, x2 - x1) == Fraction(-n, x1 * x2)


def test_submult_trace_equality_example():
    trs = {(t.d, t.s, t.t): t for t in submult_traces(6)}
    tr = trs[(2, 2, 3)]
    assert tr.lhs == Fraction(1) and tr.rhs == Fraction(1)
    assert tr.case_id == 1
    assert tr.holds and tr.bracket_ok
    assert (tr.a1, tr.a2, tr.b1, tr.b2) == (2, 2, 3, 3)
    assert (tr.c1, tr.c2) == (6, 6)


def test_submult_no_violations_small():
    for n in range(2, 61):
        assert submult_check(n) == []


def test_submult_bracket_and_cases():
    case_ids = set()
    for n in [6, 12, 24, 36, 60]:
        for tr in submult_traces(n):
            assert tr.bracket_ok, tr
            assert tr.m1 == max(Fraction(tr.a1), Fraction(tr.s * tr.t, tr.b2))
            assert tr.m2 == min(Fraction(tr.a2), Fraction(tr.s * tr.t, tr.b1))
            assert tr.case_id in (1, 2, 3)
            case_ids.add(tr.case_id)
            # k = st always lies between the extreme products
            assert tr.a1 * tr.b1 <= tr.s * tr.t <= tr.a2 * tr.b2
    assert case_ids == {1, 2, 3}  # the sweep exercises all three cases


def test_submult_requires_n_at_least_2():
    with pytest.raises(ValueError):
        submult_traces(1)
