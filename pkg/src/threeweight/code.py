"""Linear-code core: weight distributions, projectivity, and the structural
constructions (simplex, first-order Reed-Muller, direct sums, anticodes,
subcode projections, the 4*Delta family, the length-23 Golay code).

Codes are immutable.  Weight distributions come from full codeword
enumeration, Gray-code order over bit-packed words for GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ComplementNotSpanning,
    FieldMismatch,
    NotProjective,
    RankDeficient,
    SizeExceeded,
    UnsupportedParameters,
    ZeroVector,
)
from .gfmat import GF2, FieldMatrix, PrimeField

ENUMERATION_GUARD = 1 << 26


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_i of codewords per weight; zero counts are omitted."""

    n: int
    counts: tuple[tuple[int, int], ...]  # sorted (weight, frequency) pairs

    @classmethod
    def from_dict(cls, n: int, d: dict[int, int]) -> "WeightDistribution":
        return cls(n, tuple(sorted((w, a) for w, a in d.items() if a)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(a for _, a in self.counts)

    def nonzero_weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.counts if w > 0)

    def frequency(self, w: int) -> int:
        return dict(self.counts).get(w, 0)

    def enumerator(self) -> str:
        terms = ["1"] + [f"{a}x^{w}" for w, a in self.counts if w > 0]
        return " + ".join(terms)


@dataclass(frozen=True)
class MultiplicityType:
    """Position multiplicity type: m[i] = number of projective equivalence
    classes of positions of size i.  Zero positions form a class of their
    own and make the code non-full-length."""

    m: tuple[tuple[int, int], ...]  # sorted (class size, count) pairs
    zero_positions: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.m)

    def positions(self) -> int:
        return sum(i * c for i, c in self.m) + self.zero_positions


def _canonical_point(field: PrimeField, vec: tuple[int, ...]) -> tuple[int, ...] | None:
    """Scale so the first nonzero entry is 1; None for the zero vector."""
    for e in vec:
        if e:
            inv = field.inv(e)
            return tuple((x * inv) % field.p for x in vec)
    return None


def _enumerate_gf2(masks: tuple[int, ...]) -> dict[int, int]:
    counts: dict[int, int] = {0: 1}
    cw = 0
    prev = 0
    for t in range(1, 1 << len(masks)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev
        cw ^= masks[(diff & -diff).bit_length() - 1]
        prev = gray
        w = cw.bit_count()
        counts[w] = counts.get(w, 0) + 1
    return counts


def _enumerate_gfp(rows: tuple[tuple[int, ...], ...], p: int) -> dict[int, int]:
    n = len(rows[0])
    counts: dict[int, int] = {}

    def rec(i: int, current: tuple[int, ...]) -> None:
        if i == len(rows):
            w = n - current.count(0)
            counts[w] = counts.get(w, 0) + 1
            return
        row = rows[i]
        acc = current
        rec(i + 1, acc)
        for _ in range(1, p):
            acc = tuple((a + b) % p for a, b in zip(acc, row))
            rec(i + 1, acc)

    rec(0, (0,) * n)
    return counts


class LinearCode:
    """An [n, k]_q linear code given by a full-row-rank generator matrix."""

    __slots__ = ("field", "generator", "n", "k", "_distribution")

    def __init__(self, field: PrimeField, generator: FieldMatrix):
        if generator.field.p != field.p:
            raise FieldMismatch("generator matrix is over a different field")
        if generator.nrows < 1:
            raise RankDeficient("a code needs at least one generator row")
        if generator.rank() != generator.nrows:
            raise RankDeficient(
                f"generator has rank {generator.rank()} < {generator.nrows} rows"
            )
        self.field = field
        self.generator = generator
        self.n = generator.ncols
        self.k = generator.nrows
        self._distribution: WeightDistribution | None = None

    # -- basics --------------------------------------------------------

    @property
    def q(self) -> int:
        return self.field.p

    def params(self) -> tuple[int, int, int]:
        return (self.q, self.n, self.k)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def weight_distribution(self) -> WeightDistribution:
        """Exact counts by full codeword enumeration (guarded at 2^26)."""
        if self._distribution is not None:
            return self._distribution
        if self.q**self.k > ENUMERATION_GUARD:
            raise SizeExceeded(f"q^k = {self.q}**{self.k} exceeds the enumeration guard")
        if self.q == 2:
            counts = _enumerate_gf2(self.generator.row_masks())
        else:
            counts = _enumerate_gfp(self.generator.to_rows(), self.q)
        dist = WeightDistribution.from_dict(self.n, counts)
        assert dist.total() == self.q**self.k
        self._distribution = dist
        return dist

    def nonzero_weights(self) -> tuple[int, ...]:
        return self.weight_distribution().nonzero_weights()

    def is_projective(self) -> tuple[bool, MultiplicityType]:
        """Full-length with pairwise projectively inequivalent positions."""
        classes: dict[tuple[int, ...], int] = {}
        zero_positions = 0
        for col in self.generator.columns():
            rep = _canonical_point(self.field, col)
            if rep is None:
                zero_positions += 1
            else:
                classes[rep] = classes.get(rep, 0) + 1
        sizes: dict[int, int] = {}
        for c in classes.values():
            sizes[c] = sizes.get(c, 0) + 1
        mult = MultiplicityType(tuple(sorted(sizes.items())), zero_positions)
        flag = zero_positions == 0 and all(c == 1 for c in classes.values())
        return flag, mult

    def effective_length(self) -> int:
        _, mult = self.is_projective()
        return self.n - mult.zero_positions

    def point_set(self) -> set[tuple[int, ...]]:
        """Canonical projective points spanned by the generator columns."""
        pts = set()
        for col in self.generator.columns():
            rep = _canonical_point(self.field, col)
            if rep is not None:
                pts.add(rep)
        return pts

    # -- derived codes -------------------------------------------------

    def even_weight_subcode(self) -> "LinearCode":
        """Subcode of even-weight words; dimension drops by at most one."""
        if self.q != 2:
            raise FieldMismatch("even-weight subcode is a binary notion")
        rows = self.generator.to_rows()
        parities = [sum(r) % 2 for r in rows]
        if not any(parities):
            return self
        pivot = parities.index(1)
        new_rows = []
        for i, r in enumerate(rows):
            if i == pivot:
                continue
            if parities[i]:
                new_rows.append(tuple((a + b) % 2 for a, b in zip(r, rows[pivot])))
            else:
                new_rows.append(r)
        if not new_rows:
            raise RankDeficient("even-weight subcode is the zero code")
        return LinearCode(self.field, FieldMatrix.from_rows(self.field, new_rows))

    def anticode(self) -> "LinearCode":
        """Code on the complementary point set of PG(k-1, q).

        Requires projectivity and a spanning complement (equivalently no
        codeword of weight q^(k-1)).  The nonzero weights map to
        q^(k-1) - w; this is re-verified by enumeration.
        """
        flag, _ = self.is_projective()
        if not flag:
            raise NotProjective("anticode is defined for projective codes only")
        dist = self.weight_distribution()
        qk1 = self.q ** (self.k - 1)
        if dist.frequency(qk1) != 0:
            raise ComplementNotSpanning(
                f"code attains weight q^(k-1) = {qk1}; complement does not span"
            )
        points = self.point_set()
        comp = [pt for pt in _projective_points(self.field, self.k) if pt not in points]
        if not comp:
            raise ComplementNotSpanning("complement is empty")
        gen = FieldMatrix.from_columns(self.field, comp)
        out = LinearCode(self.field, gen)
        expected = {0: 1}
        for w, a in dist.counts:
            if w > 0:
                expected[qk1 - w] = expected.get(qk1 - w, 0) + a
        assert out.weight_distribution().as_dict() == expected
        return out

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        """Block-diagonal sum; the weight enumerator multiplies (asserted)."""
        if self.q != other.q:
            raise FieldMismatch("direct sum needs a common field")
        rows = []
        for r in self.generator.to_rows():
            rows.append(r + (0,) * other.n)
        for r in other.generator.to_rows():
            rows.append((0,) * self.n + r)
        out = LinearCode(self.field, FieldMatrix.from_rows(self.field, rows))
        da, db = self.weight_distribution().as_dict(), other.weight_distribution().as_dict()
        prod: dict[int, int] = {}
        for wa, aa in da.items():
            for wb, ab in db.items():
                prod[wa + wb] = prod.get(wa + wb, 0) + aa * ab
        assert out.weight_distribution().as_dict() == prod
        return out

    def subcode_projection(self, point: tuple[int, ...]) -> "LinearCode":
        """Image of the code's point multiset under projection away from a
        point P, re-expressed in V/P; has dimension k-1."""
        p = self.field.p
        point = tuple(int(e) % p for e in point)
        if len(point) != self.k:
            raise ValueError(f"point must live in F_q^{self.k}")
        if self.k < 2:
            raise UnsupportedParameters("projection needs dimension >= 2")
        rep = _canonical_point(self.field, point)
        if rep is None:
            raise ZeroVector("projection point must be nonzero")
        # complete rep to a basis; quotient map drops the rep coordinate
        basis_rows = [rep]
        rank = 1
        mat = [rep]
        for j in range(self.k):
            e = tuple(1 if i == j else 0 for i in range(self.k))
            trial = FieldMatrix.from_rows(self.field, mat + [e])
            if trial.rank() == rank + 1:
                mat.append(e)
                rank += 1
            if rank == self.k:
                break
        # change of basis: x -> coordinates in (rep, e_j1, ..., e_j(k-1))
        binv = _matrix_inverse(FieldMatrix.from_rows(self.field, mat))
        new_cols = []
        for col in self.generator.columns():
            if _canonical_point(self.field, col) == rep:
                continue  # points equal to P are removed by the projection
            coords = _matvec(binv.transpose(), col, p)
            new_cols.append(coords[1:])
        gen = FieldMatrix.from_columns(self.field, new_cols)
        return LinearCode(self.field, gen)


def _matvec(m: FieldMatrix, v: tuple[int, ...], p: int) -> tuple[int, ...]:
    return tuple(sum(r[j] * v[j] for j in range(len(v))) % p for r in m.to_rows())


def _matrix_inverse(m: FieldMatrix) -> FieldMatrix:
    if m.nrows != m.ncols:
        raise ValueError("only square matrices can be inverted")
    n = m.nrows
    aug = FieldMatrix.from_rows(
        m.field, (tuple(m.row(i)) + tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    )
    reduced, rank, _ = aug.rref()
    if rank != n:
        raise RankDeficient("matrix is singular")
    return FieldMatrix.from_rows(m.field, (tuple(reduced.row(i))[n:] for i in range(n)))


@lru_cache(maxsize=None)
def _projective_points_cached(p: int, k: int) -> tuple[tuple[int, ...], ...]:
    field = PrimeField(p)
    pts = []
    seen = set()
    # lexicographic walk over all nonzero vectors, keeping first-of-class
    vec = [0] * k

    def rec(i: int) -> None:
        if i == k:
            t = tuple(vec)
            if any(t):
                rep = _canonical_point(field, t)
                if rep not in seen:
                    seen.add(rep)
                    pts.append(rep)
            return
        for e in range(p):
            vec[i] = e
            rec(i + 1)
        vec[i] = 0

    rec(0)
    return tuple(pts)


def _projective_points(field: PrimeField, k: int) -> tuple[tuple[int, ...], ...]:
    return _projective_points_cached(field.p, k)


# -- named constructions ----------------------------------------------


def simplex(q: int, k: int) -> LinearCode:
    """Sim_q(k): all points of PG(k-1, q) as columns; constant weight q^(k-1)."""
    if k < 1:
        raise UnsupportedParameters("simplex needs k >= 1")
    field = PrimeField(q)
    return LinearCode(field, FieldMatrix.from_columns(field, _projective_points(field, k)))


def reed_muller(q: int, k: int) -> LinearCode:
    """First-order Reed-Muller code RM_q(k): an affine subspace of points.

    Columns are all (1, a_2, ..., a_k); the all-one word is the last
    generator row (the 4*Delta construction relies on that layout).
    """
    if k < 2:
        raise UnsupportedParameters("first-order Reed-Muller needs k >= 2")
    field = PrimeField(q)
    cols = []
    tail = [0] * (k - 1)

    def rec(i: int) -> None:
        if i == k - 1:
            cols.append((1,) + tuple(tail))
            return
        for e in range(q):
            tail[i] = e
            rec(i + 1)
        tail[i] = 0

    rec(0)
    # rows: coordinate functionals a_2..a_k, then the all-one row
    rows = [tuple(c[i] for c in cols) for i in range(1, k)]
    rows.append(tuple(1 for _ in cols))
    return LinearCode(field, FieldMatrix.from_rows(field, rows))


def parity_check_code(n: int) -> LinearCode:
    """Binary [n, n-1] even-weight code."""
    if n < 2:
        raise UnsupportedParameters("parity-check code needs n >= 2")
    rows = [tuple(1 if j in (i, n - 1) else 0 for j in range(n)) for i in range(n - 1)]
    return LinearCode(GF2, FieldMatrix.from_rows(GF2, rows))


GOLAY23_GENERATOR_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # x^0 .. x^11


def golay23() -> LinearCode:
    """The binary [23, 12] Golay code from its cyclic generator polynomial.

    Build-time validation: the even-weight subcode must have the
    enumerator 1 + 506 x^8 + 1288 x^12 + 253 x^16.
    """
    rows = []
    for shift in range(12):
        row = [0] * 23
        for d, c in enumerate(GOLAY23_GENERATOR_POLY):
            if c:
                row[shift + d] = 1
        rows.append(tuple(row))
    code = LinearCode(GF2, FieldMatrix.from_rows(GF2, rows))
    even = code.even_weight_subcode()
    assert even.weight_distribution().as_dict() == {0: 1, 8: 506, 12: 1288, 16: 253}
    return code


def theorem_4delta(a: int) -> LinearCode:
    """The extremal [4*Delta, 2a+3] code with weights (Delta, 2Delta, 3Delta),
    Delta = 2^a: two first-order Reed-Muller blocks of dimension a+2 glued
    so the left block's all-one row carries the right block's first row.

    Weight enumerator (asserted by enumeration):
    1 + (4D-3) x^D + (8D^2-8D+3) x^2D + (4D-1) x^3D.
    """
    if a < 3:
        raise UnsupportedParameters("the 4*Delta construction needs a >= 3")
    delta = 1 << a
    rm = reed_muller(2, a + 2)  # all-one word is the last row
    rm_rows = rm.generator.to_rows()
    half = rm.n  # 2 * delta
    zero = (0,) * half
    rows: list[tuple[int, ...]] = []
    for r in rm_rows[:-1]:
        rows.append(r + zero)
    rows.append(rm_rows[-1] + rm_rows[0])  # shared row: left all-ones, right r_1
    for r in rm_rows[1:]:
        rows.append(zero + r)
    code = LinearCode(GF2, FieldMatrix.from_rows(GF2, rows))
    assert code.n == 4 * delta and code.k == 2 * a + 3
    expected = {
        0: 1,
        delta: 4 * delta - 3,
        2 * delta: 8 * delta * delta - 8 * delta + 3,
        3 * delta: 4 * delta - 1,
    }
    assert code.weight_distribution().as_dict() == expected
    return code


def theorem_4delta_minus1(a: int) -> LinearCode:
    """The length 4*Delta - 1 companion: Sim_2(a+1) + RM_2(a+2) (direct sum).

    Weight enumerator (asserted): 1 + (6D-3) x^D + (8D^2-8D+3) x^2D
    + (2D-1) x^3D with D = 2^a.
    """
    if a < 1:
        raise UnsupportedParameters("needs a >= 1")
    delta = 1 << a
    code = simplex(2, a + 1).direct_sum(reed_muller(2, a + 2))
    expected = {
        0: 1,
        delta: 6 * delta - 3,
        2 * delta: 8 * delta * delta - 8 * delta + 3,
        3 * delta: 2 * delta - 1,
    }
    assert code.weight_distribution().as_dict() == expected
    return code


_CONSTRUCTIONS = {
    "simplex": simplex,
    "reed_muller": reed_muller,
    "theorem_4delta": theorem_4delta,
    "theorem_4delta_minus1": theorem_4delta_minus1,
    "golay23": golay23,
    "parity_check": parity_check_code,
}


def construct_named(name: str, *args: int) -> LinearCode:
    try:
        builder = _CONSTRUCTIONS[name]
    except KeyError:
        raise UnsupportedParameters(f"unknown construction {name!r}") from None
    return builder(*args)


# -- structural predicates ---------------------------------------------


@dataclass(frozen=True)
class StructuralReport:
    """Checkable consequences of the classical weight-restriction lemmas."""

    constant_weight: bool
    bonisoli_ok: bool | None  # constant weight w = u * q^(k-1)
    bonisoli_u: int | None
    two_weight_projective: bool
    delsarte_ok: bool | None  # weights u*p^t, (u+1)*p^t
    delsarte_u: int | None
    delsarte_t: int | None
    three_weight_projective: bool
    length_bound_ok: bool | None  # n <= (q^k-1)/(q-1) - 2
    dimension_ok: bool | None  # k >= 3
    has_nonzero_even_weight: bool | None  # q = 2, k >= 2


def structural_predicates(code: LinearCode) -> StructuralReport:
    weights = code.nonzero_weights()
    projective, _ = code.is_projective()
    q, n, k = code.params()
    p = code.field.p

    constant = len(weights) == 1
    bonisoli_ok = bonisoli_u = None
    if constant:
        w = weights[0]
        qk1 = q ** (k - 1)
        bonisoli_ok = w % qk1 == 0
        bonisoli_u = w // qk1 if bonisoli_ok else None

    two_wt = len(weights) == 2 and projective
    delsarte_ok = delsarte_u = delsarte_t = None
    if two_wt:
        # w1 = u p^t and w2 = (u+1) p^t <=> w2 - w1 is a power of p dividing w1
        w1, w2 = weights
        d = w2 - w1
        t = 0
        while d % p == 0:
            d //= p
            t += 1
        delsarte_ok = d == 1 and w1 % (w2 - w1) == 0
        if delsarte_ok:
            delsarte_u, delsarte_t = w1 // (w2 - w1), t

    three_wt = len(weights) == 3 and projective
    length_ok = dim_ok = None
    if three_wt:
        length_ok = n <= (q**k - 1) // (q - 1) - 2
        dim_ok = k >= 3

    even_ok = None
    if q == 2 and k >= 2:
        even_ok = any(w % 2 == 0 for w in weights)

    return StructuralReport(
        constant,
        bonisoli_ok,
        bonisoli_u,
        two_wt,
        delsarte_ok,
        delsarte_u,
        delsarte_t,
        three_wt,
        length_ok,
        dim_ok,
        even_ok,
    )
