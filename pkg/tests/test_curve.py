from __future__ import annotations

import random

import pytest

from threeweight.curve import (
    CurveQuery,
    identity_check,
    monomial_sum,
    normalize_point,
    search_integral_points,
    vandam_lhs,
)
from threeweight.errors import GuardExceeded

OBVIOUS = [(0, 1, -1), (1, -1, 0), (1, 0, -1)]


def test_vandam_parametric_family():
    for t in (1, 2, 17, 10**6):
        for s in (3, 5, 7, 9):
            assert vandam_lhs(s, t, 0, -t) == 0


def test_vandam_factorization_at_s3():
    rng = random.Random(4)
    for _ in range(100):
        t1, t2, t3 = (rng.randint(-50, 50) for _ in range(3))
        if t1 + t2 + t3 == 0:
            assert vandam_lhs(3, t1, t2, t3) == 0


def test_vandam_product_form_example():
    assert vandam_lhs(5, 3, 1, -2) == 660
    assert (3 - 1) * (3 + 2) * (1 + 2) * monomial_sum(3, 3, 1, -2) == 660


def test_monomial_sum_values():
    assert monomial_sum(1, 2, 3, 4) == 9
    assert monomial_sum(3, 1, 1, 1) == 10  # C(5,2) monomials of degree 3
    assert monomial_sum(3, 1, -1, 0) == 0


def test_identity_check_randomized():
    rng = random.Random(8)
    for s in range(2, 12):
        for _ in range(100):
            args = [rng.randint(-(10**6), 10**6) for _ in range(3)]
            assert identity_check(s, *args)


def test_identity_check_degenerate():
    assert identity_check(7, 5, 5, -3)
    assert identity_check(7, 2, -1, -1)


def test_normalize_point():
    assert normalize_point((-2, 0, 2)).coords() == (1, 0, -1)
    assert normalize_point((0, -3, 3)).coords() == (0, 1, -1)
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0))


@pytest.mark.parametrize("d,bound", [(3, 100), (5, 100)])
def test_search_returns_only_obvious_points(d, bound):
    pts = [p.coords() for p in search_integral_points(CurveQuery(d, bound))]
    assert pts == OBVIOUS


def test_search_guard():
    with pytest.raises(GuardExceeded):
        search_integral_points(CurveQuery(3, 501))


def test_search_output_closed_under_coordinate_permutations():
    pts = {p.coords() for p in search_integral_points(CurveQuery(3, 60))}
    for a, b, c in list(pts):
        for perm in ((a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            assert normalize_point(perm).coords() in pts


def test_search_cross_check_against_unreduced_brute_force():
    bound = 30
    d = 3
    brute = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                if len({a, b, c}) == 3 and vandam_lhs(d + 2, a, b, c) == 0:
                    brute.add(normalize_point((a, b, c)).coords())
    pts = {p.coords() for p in search_integral_points(CurveQuery(d, bound))}
    distinct = {p for p in pts if len(set(p)) == 3}
    assert brute == distinct


def test_even_degree_box_has_no_ordered_zero():
    # even s: no real (hence no integer) solutions with t1 > t2 > t3
    for s in (4, 6):
        for a in range(-12, 13):
            for b in range(-12, 13):
                for c in range(-12, 13):
                    if a > b > c:
                        assert vandam_lhs(s, a, b, c) != 0
