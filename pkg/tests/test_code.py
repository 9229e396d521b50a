from __future__ import annotations

import random

import pytest

from threeweight.code import (
    LinearCode,
    construct_named,
    golay23,
    parity_check_code,
    reed_muller,
    simplex,
    structural_predicates,
    theorem_4delta,
    theorem_4delta_minus1,
)
from threeweight.errors import (
    ComplementNotSpanning,
    FieldMismatch,
    RankDeficient,
    SizeExceeded,
    UnsupportedParameters,
    ZeroVector,
)
from threeweight.gfmat import GF2, GF3, FieldMatrix
from threeweight.matrixio import parse_matrix_file
from threeweight.transform import dual_distribution, power_moment

from conftest import data_path


def lemma_four_three():
    return parse_matrix_file(data_path("matrices/q2_n004_k03_w1_2_3.txt"))


def test_rank_enforced():
    with pytest.raises(RankDeficient):
        LinearCode(GF2, FieldMatrix.from_rows(GF2, [[1, 1], [1, 1]]))


def test_weight_distribution_small_cases():
    assert lemma_four_three().weight_distribution().as_dict() == {0: 1, 1: 1, 2: 3, 3: 3}
    assert simplex(2, 3).weight_distribution().as_dict() == {0: 1, 4: 7}
    c = parse_matrix_file(data_path("matrices/q2_n024_k11_w8_12_16.txt"))
    d = c.weight_distribution()
    assert (d.frequency(8), d.frequency(12), d.frequency(16)) == (378, 1288, 381)


def test_enumeration_guard():
    big = LinearCode(GF2, FieldMatrix.identity(GF2, 27))
    with pytest.raises(SizeExceeded):
        big.weight_distribution()


def test_is_projective():
    assert parity_check_code(6).is_projective()[0]
    doubled = simplex(2, 2).direct_sum(simplex(2, 2))
    # same columns twice, re-read as one 2x6 matrix: build the true 2-fold repetition
    rows = [r + r for r in simplex(2, 2).generator.to_rows()]
    rep = LinearCode(GF2, FieldMatrix.from_rows(GF2, rows))
    flag, mult = rep.is_projective()
    assert not flag
    assert mult.as_dict() == {2: 3}
    assert doubled.k == 4  # direct sum is a different, 4-dimensional object


def test_multiplicity_type_positions_invariant(fixture_codes):
    for _, code, _ in fixture_codes[:10]:
        flag, mult = code.is_projective()
        assert flag and mult.positions() == code.n
        assert mult.as_dict() == {1: code.n}


def test_even_weight_subcode_oracle():
    code = lemma_four_three()
    # oracle first: enumerate the 8 words directly and keep the even ones
    rows = code.generator.to_rows()
    words = set()
    for m in range(8):
        vec = tuple(
            sum(rows[i][j] for i in range(3) if (m >> i) & 1) % 2 for j in range(4)
        )
        if sum(vec) % 2 == 0:
            words.add(vec)
    even = code.even_weight_subcode()
    assert even.k == 2 and even.n == 4
    assert even.weight_distribution().as_dict() == {0: 1, 2: 3}
    assert even.effective_length() == 3
    spanned = set()
    for m in range(4):
        er = even.generator.to_rows()
        spanned.add(
            tuple(sum(er[i][j] for i in range(2) if (m >> i) & 1) % 2 for j in range(4))
        )
    assert spanned == words


def test_even_weight_subcode_of_even_code_is_same():
    pc = parity_check_code(5)
    assert pc.even_weight_subcode() is pc


def test_even_weight_subcode_requires_binary():
    with pytest.raises(FieldMismatch):
        simplex(3, 2).even_weight_subcode()


def test_golay_even_subcode_enumerator():
    even = golay23().even_weight_subcode()
    assert even.n == 23 and even.k == 11
    assert even.weight_distribution().as_dict() == {0: 1, 8: 506, 12: 1288, 16: 253}


def test_anticode_parity7():
    anti = parity_check_code(7).anticode()
    assert (anti.n, anti.k) == (56, 6)
    d = anti.weight_distribution()
    assert d.nonzero_weights() == (26, 28, 30)
    assert tuple(d.frequency(w) for w in (26, 28, 30)) == (7, 35, 21)


def test_anticode_of_simplex_rejected():
    with pytest.raises(ComplementNotSpanning):
        simplex(2, 3).anticode()


def test_anticode_involution_preserves_distribution():
    code = lemma_four_three()
    anti = code.anticode()
    assert anti.weight_distribution().as_dict() == {0: 1, 1: 3, 2: 3, 3: 1}
    back = anti.anticode()
    assert back.weight_distribution().as_dict() == code.weight_distribution().as_dict()
    # and the parity-check round trip: [7,6] -> [56,6] -> [7,6]
    pc = parity_check_code(7)
    again = pc.anticode().anticode()
    assert again.weight_distribution().as_dict() == pc.weight_distribution().as_dict()


def test_direct_sum_product_rule():
    s = simplex(2, 2)
    ds = s.direct_sum(s)
    assert (ds.n, ds.k) == (6, 4)
    assert ds.weight_distribution().as_dict() == {0: 1, 2: 6, 4: 9}  # (1+3x^2)^2
    # oracle: convolution of enumerators, computed independently
    a = simplex(2, 3).weight_distribution().as_dict()
    b = reed_muller(2, 4).weight_distribution().as_dict()
    conv = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            conv[wa + wb] = conv.get(wa + wb, 0) + ca * cb
    big = simplex(2, 3).direct_sum(reed_muller(2, 4))
    assert (big.n, big.k) == (15, 7)
    assert big.weight_distribution().as_dict() == conv
    assert big.nonzero_weights() == (4, 8, 12)


def test_direct_sum_random_product_rule():
    rng = random.Random(23)
    for _ in range(5):
        rows1 = [[rng.randrange(2) for _ in range(5)] for _ in range(2)]
        rows2 = [[rng.randrange(2) for _ in range(4)] for _ in range(2)]
        try:
            c1 = LinearCode(GF2, FieldMatrix.from_rows(GF2, rows1))
            c2 = LinearCode(GF2, FieldMatrix.from_rows(GF2, rows2))
        except RankDeficient:
            continue
        c1.direct_sum(c2)  # product rule asserted inside


def test_direct_sum_field_mismatch():
    with pytest.raises(FieldMismatch):
        simplex(2, 2).direct_sum(simplex(3, 2))


def test_subcode_projection_of_simplex():
    s = simplex(2, 3)
    proj = s.subcode_projection((1, 0, 0))
    assert (proj.n, proj.k) == (6, 2)
    # oracle: the image multiset is the 2-fold repetition of the planar simplex
    pts = {}
    for col in proj.generator.columns():
        pts[col] = pts.get(col, 0) + 1
    assert sorted(pts.values()) == [2, 2, 2]
    assert proj.weight_distribution().as_dict() == {0: 1, 4: 3}


def test_subcode_projection_zero_vector():
    with pytest.raises(ZeroVector):
        simplex(2, 3).subcode_projection((0, 0, 0))


def test_subcode_projection_is_codim1_subcode_reexpressed():
    # words of the projection are exactly the codewords whose hyperplane
    # contains P, with matching weights
    code = parse_matrix_file(data_path("matrices/q2_n008_k04_w2_4_6.txt"))
    point = (1, 0, 1, 0)
    proj = code.subcode_projection(point)
    rows = code.generator.to_rows()
    sub_weights: dict[int, int] = {}
    for m in range(1 << code.k):
        x = [(m >> i) & 1 for i in range(code.k)]
        if sum(a * b for a, b in zip(x, point)) % 2:
            continue  # hyperplane of this codeword misses P
        word = tuple(
            sum(rows[i][j] for i in range(code.k) if x[i]) % 2 for j in range(code.n)
        )
        w = sum(word)
        sub_weights[w] = sub_weights.get(w, 0) + 1
    assert proj.weight_distribution().as_dict() == sub_weights


def test_subcode_projection_multiplicity_zero_point_keeps_cardinality():
    code = lemma_four_three()  # its point set misses three points of the plane
    missing = next(
        p
        for p in [(1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
        if p not in code.point_set()
    )
    proj = code.subcode_projection(missing)
    assert proj.n == code.n


def test_subcode_projection_recovers_4delta_codes():
    # projecting the doubled Reed-Muller block structure: at a point off the
    # point set (affine part of one block + infinity part of the other) the
    # image is the extremal length-4D code; at a point of the point set it is
    # the simplex + Reed-Muller direct sum of length 4D-1
    a = 3
    rm = reed_muller(2, a + 2)
    bar = rm.direct_sum(rm)
    k2 = a + 2
    # u = affine point of block 1 (its all-one coordinate sits last in the
    # block), w = a nonzero infinity point of block 2
    glue = tuple(
        1 if i in (k2 - 1, k2) else 0 for i in range(2 * k2)
    )
    assert glue not in bar.point_set()
    proj = bar.subcode_projection(glue)
    target = theorem_4delta(a)
    assert proj.weight_distribution().as_dict() == target.weight_distribution().as_dict()
    assert proj.is_projective()[0]

    inside = next(iter(bar.point_set()))
    proj1 = bar.subcode_projection(inside)
    minus1 = theorem_4delta_minus1(a)
    assert proj1.weight_distribution().as_dict() == minus1.weight_distribution().as_dict()


@pytest.mark.parametrize(
    "a,expect",
    [
        (3, {0: 1, 8: 29, 16: 451, 24: 31}),
        (4, {0: 1, 16: 61, 32: 1923, 48: 63}),
    ],
)
def test_theorem_4delta_enumerator(a, expect):
    code = theorem_4delta(a)
    assert (code.n, code.k) == (4 * 2**a, 2 * a + 3)
    assert code.weight_distribution().as_dict() == expect
    assert code.is_projective()[0]


def test_theorem_4delta_next_level():
    # the closed-form enumerator keeps holding past the tested range
    code = theorem_4delta(5)  # [128, 13]; enumerator asserted by the builder
    assert (code.n, code.k) == (128, 13)
    assert code.is_projective()[0]


def test_theorem_4delta_minus1():
    code = theorem_4delta_minus1(3)
    assert (code.n, code.k) == (31, 9)
    assert code.weight_distribution().as_dict() == {0: 1, 8: 45, 16: 451, 24: 15}


def test_reed_muller_enumerator():
    for q, k in ((2, 4), (2, 5), (3, 3)):
        code = reed_muller(q, k)
        assert (code.n, code.k) == (q ** (k - 1), k)
        expect = {0: 1, (q - 1) * q ** (k - 2): q**k - q, q ** (k - 1): q - 1}
        assert code.weight_distribution().as_dict() == expect


def test_construct_named_dispatch():
    assert construct_named("simplex", 2, 3).n == 7
    assert construct_named("parity_check", 6).k == 5
    with pytest.raises(UnsupportedParameters):
        construct_named("mystery")


def test_structural_predicates():
    rm = structural_predicates(reed_muller(2, 4))
    assert rm.two_weight_projective and rm.delsarte_ok
    assert (rm.delsarte_u, rm.delsarte_t) == (1, 2)

    s = structural_predicates(simplex(3, 3))
    assert s.constant_weight and s.bonisoli_ok and s.bonisoli_u == 1

    l43 = structural_predicates(lemma_four_three())
    assert l43.three_weight_projective
    assert l43.length_bound_ok  # 4 <= 2^3 - 1 - 2
    assert l43.dimension_ok
    assert l43.has_nonzero_even_weight


def test_power_moments_binary_closed_forms(fixture_codes):
    # first three binary power moments with B1 = B2 = 0, on the q=2 corpus
    for _, code, _ in fixture_codes:
        if code.q != 2:
            continue
        a = code.weight_distribution().as_dict()
        n, k = code.n, code.k
        assert power_moment(a, 0) == 2**k
        assert power_moment(a, 1) == 2 ** (k - 1) * n
        assert power_moment(a, 2) == 2 ** (k - 2) * n * (n + 1)
        b = dual_distribution(a, n, 2, k)
        assert power_moment(a, 3) == 2 ** (k - 3) * (n * n * (n + 3) - 6 * b[3])


def test_power_moments_general_first_moment(fixture_codes):
    for _, code, _ in fixture_codes:
        a = code.weight_distribution().as_dict()
        q, n, k = code.params()
        assert power_moment(a, 1) == q ** (k - 1) * n * (q - 1)


def test_col_mult_b2_identity():
    # ternary 2-fold repetition: m_2 classes feed B2 = sum (q-1) C(i,2) m_i
    rows = [r + r for r in simplex(3, 2).generator.to_rows()]
    rep = LinearCode(GF3, FieldMatrix.from_rows(GF3, rows))
    flag, mult = rep.is_projective()
    assert not flag
    b = dual_distribution(rep.weight_distribution().as_dict(), rep.n, 3, rep.k)
    expect_b2 = sum(2 * (i * (i - 1) // 2) * c for i, c in mult.as_dict().items())
    assert b[2] == expect_b2
    assert b[1] == 0  # full-length
