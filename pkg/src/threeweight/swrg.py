"""Coset graphs of dual codes, exact spectrum verification, the s-walk
regularity test, and triple-sum-set constants.

The coset graph of the dual of a projective [n,k]_q code lives on the q^k
syndromes; two syndromes are adjacent when they differ by a nonzero scalar
multiple of a generator column.  That makes it a Cayley graph on (F_q^k, +)
with connection set Omega (the scalar closure of the columns), which is what
all the exact algorithms here exploit: walk counts are convolution powers of
the indicator of Omega, and the spectrum comes from additive characters.

Triple-sum counts are ordered: sigma_0/sigma_1 count ordered triples
(x, y, z) in Omega^3 with x + y + z = h.  (An unordered convention would
differ by a fixed combinatorial factor; both constants are always reported,
so a convention mismatch is visible.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .code import LinearCode
from .errors import DuplicateWeights, GuardExceeded, NotProjective, ZeroInOmega

VERTEX_GUARD = 1 << 14
WALK_GUARD = 9
TSS_GUARD = 1 << 30


@dataclass(frozen=True)
class SpectrumClaim:
    """Claimed distinct eigenvalues, descending; the largest is the degree."""

    eigenvalues: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.eigenvalues)) != len(self.eigenvalues):
            raise DuplicateWeights("claimed eigenvalues must be distinct")
        if tuple(sorted(self.eigenvalues, reverse=True)) != self.eigenvalues:
            raise ValueError("eigenvalues must be sorted descending")


@dataclass(frozen=True)
class TssInstance:
    """Result of a triple-sum-set check on a scalar-closed Omega."""

    size: int
    consistent: bool
    sigma0: int | None
    sigma1: int | None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class SwrgResult:
    is_swrg: bool
    s: int
    constants: tuple[int, int, int] | None  # (equal, adjacent, non-adjacent)
    witness: tuple[int, int] | None = None  # two group elements, same class


def encode_vector(vec: Sequence[int], q: int) -> int:
    code = 0
    for digit in reversed(vec):
        code = code * q + digit % q
    return code


def decode_vector(code: int, q: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(code % q)
        code //= q
    return tuple(out)


class CosetGraph:
    """Cayley graph on F_q^k with a scalar-closed connection set."""

    __slots__ = ("q", "k", "nvertices", "omega", "_omega_set", "_shift")

    def __init__(self, q: int, k: int, omega: Iterable[int]):
        self.q = q
        self.k = k
        self.nvertices = q**k
        self.omega = tuple(sorted(set(omega)))
        self._omega_set = frozenset(self.omega)
        if 0 in self._omega_set:
            raise ZeroInOmega("connection set must not contain 0")
        if self.nvertices > VERTEX_GUARD:
            raise GuardExceeded(f"vertex count {self.nvertices} over guard {VERTEX_GUARD}")
        # shift[w] is the permutation h -> h + w, precomputed per connection element
        if q == 2:
            self._shift = None  # xor is cheap enough inline
        else:
            self._shift = {w: self._add_table(w) for w in self.omega}

    def _add_table(self, w: int) -> list[int]:
        q, k = self.q, self.k
        wv = decode_vector(w, q, k)
        table = []
        for h in range(self.nvertices):
            hv = decode_vector(h, q, k)
            table.append(encode_vector([(a + b) % q for a, b in zip(hv, wv)], q))
        return table

    @property
    def degree(self) -> int:
        return len(self.omega)

    def add(self, u: int, v: int) -> int:
        if self.q == 2:
            return u ^ v
        uv = decode_vector(u, self.q, self.k)
        vv = decode_vector(v, self.q, self.k)
        return encode_vector([(a + b) % self.q for a, b in zip(uv, vv)], self.q)

    def neighbors(self, v: int) -> list[int]:
        if self.q == 2:
            return sorted(v ^ w for w in self.omega)
        return sorted(self._shift[w][v] for w in self.omega)

    def is_adjacent(self, u: int, v: int) -> bool:
        return self.add(u, self.negate(v)) in self._omega_set

    def negate(self, v: int) -> int:
        if self.q == 2:
            return v
        vv = decode_vector(v, self.q, self.k)
        return encode_vector([(-a) % self.q for a in vv], self.q)

    def apply_adjacency(self, vec: list[int]) -> list[int]:
        """(A vec)[h] = sum over connection elements of vec[h - w]."""
        n = self.nvertices
        out = [0] * n
        if self.q == 2:
            for w in self.omega:
                for h in range(n):
                    out[h] += vec[h ^ w]
        else:
            for w in self.omega:
                table = self._shift[w]
                for h in range(n):
                    out[table[h]] += vec[h]
        return out

    def walk_counts(self, s: int) -> list[int]:
        """Number of length-s walks from 0 to each vertex, exactly."""
        if s > WALK_GUARD:
            raise GuardExceeded(f"walk length {s} over guard {WALK_GUARD}")
        vec = [0] * self.nvertices
        vec[0] = 1
        for _ in range(s):
            vec = self.apply_adjacency(vec)
        return vec

    def adjacency_lines(self) -> list[str]:
        return [f"{v}: " + " ".join(str(u) for u in self.neighbors(v)) for v in range(self.nvertices)]

    def summary(self) -> dict:
        eigs = self.spectrum_multiplicities()
        return {
            "q": self.q,
            "k": self.k,
            "vertices": self.nvertices,
            "degree": self.degree,
            "eigenvalues": {str(e): m for e, m in sorted(eigs.items(), reverse=True)},
        }

    def spectrum_multiplicities(self) -> dict[int, int]:
        """Exact eigenvalue multiset via additive characters."""
        if self.q == 2:
            vals = _walsh_transform([1 if i in set(self.omega) else 0 for i in range(self.nvertices)])
            out: dict[int, int] = {}
            for v in vals:
                out[v] = out.get(v, 0) + 1
            return out
        # q = 3: pair {w, 2w} contributes 2 when <u, w> = 0 and -1 otherwise
        pairs = []
        seen = set()
        for w in self.omega:
            if w in seen:
                continue
            nw = self.negate(w)
            seen.add(w)
            seen.add(nw)
            pairs.append(decode_vector(w, self.q, self.k))
        out = {}
        for u in range(self.nvertices):
            uv = decode_vector(u, self.q, self.k)
            lam = 0
            for wv in pairs:
                dot = sum(a * b for a, b in zip(uv, wv)) % self.q
                lam += 2 if dot == 0 else -1
            out[lam] = out.get(lam, 0) + 1
        return out


def _walsh_transform(vec: list[int]) -> list[int]:
    out = list(vec)
    h = 1
    n = len(out)
    while h < n:
        for i in range(0, n, h * 2):
            for j in range(i, i + h):
                x, y = out[j], out[j + h]
                out[j], out[j + h] = x + y, x - y
        h *= 2
    return out


def omega_from_code(code: LinearCode) -> tuple[tuple[int, ...], ...]:
    """Scalar closure of the generator columns, as vectors in F_q^k."""
    q = code.q
    omega = set()
    for col in code.generator.columns():
        for lam in range(1, q):
            omega.add(tuple((lam * e) % q for e in col))
    return tuple(sorted(omega))


def coset_graph(code: LinearCode) -> CosetGraph:
    """Coset graph of the dual code, on syndrome space; n(q-1)-regular."""
    flag, _ = code.is_projective()
    if not flag:
        raise NotProjective("coset graph construction requires a projective code")
    if code.q**code.k > VERTEX_GUARD:
        raise GuardExceeded("syndrome space over the vertex guard")
    omega = [encode_vector(v, code.q) for v in omega_from_code(code)]
    g = CosetGraph(code.q, code.k, omega)
    assert g.degree == code.n * (code.q - 1)
    return g


def eigenvalues_from_weights(q: int, n: int, weights: Iterable[int]) -> SpectrumClaim:
    """theta_i = n(q-1) - q*w_i, descending; weights must include 0."""
    ws = tuple(weights)
    if len(set(ws)) != len(ws):
        raise DuplicateWeights(f"weights must be distinct, got {ws}")
    if 0 not in ws:
        raise ValueError("weight list must include w_0 = 0")
    return SpectrumClaim(tuple(sorted((n * (q - 1) - q * w for w in ws), reverse=True)))


def verify_spectrum(graph: CosetGraph, claim: SpectrumClaim) -> bool:
    """True iff the spectrum equals the claimed set.

    Containment: the product of (A - theta I) over the claimed values
    annihilates the standard basis vector at 0 (for a Cayley graph the
    operator is translation invariant, so that already gives p(A) = 0).
    Occurrence: each claimed value must have positive multiplicity, i.e.
    every factor A - theta I is rank-deficient; multiplicities come from
    the exact character spectrum.
    """
    if claim.eigenvalues[0] != graph.degree:
        return False
    vec = [0] * graph.nvertices
    vec[0] = 1
    for theta in claim.eigenvalues:
        applied = graph.apply_adjacency(vec)
        vec = [a - theta * b for a, b in zip(applied, vec)]
    if any(vec):
        return False
    mults = graph.spectrum_multiplicities()
    if any(theta not in mults for theta in claim.eigenvalues):
        return False
    return set(mults) == set(claim.eigenvalues)


def is_s_swrg(graph: CosetGraph, s: int) -> SwrgResult:
    """Walk-regularity test: the number of length-s walks between two
    vertices may depend only on equal/adjacent/non-adjacent."""
    if s < 3 or s % 2 == 0:
        raise ValueError("the walk-regularity test is for odd s >= 3")
    counts = graph.walk_counts(s)
    omega = set(graph.omega)
    adjacent = {counts[h] for h in graph.omega}
    non_adjacent = {counts[h] for h in range(1, graph.nvertices) if h not in omega}
    if len(adjacent) > 1:
        vals = sorted(adjacent)
        wit = [h for h in graph.omega if counts[h] in (vals[0], vals[-1])]
        return SwrgResult(False, s, None, (wit[0], wit[-1]))
    if len(non_adjacent) > 1:
        vals = sorted(non_adjacent)
        wit = [
            h
            for h in range(1, graph.nvertices)
            if h not in omega and counts[h] in (vals[0], vals[-1])
        ]
        return SwrgResult(False, s, None, (wit[0], wit[-1]))
    return SwrgResult(
        True,
        s,
        (
            counts[0],
            adjacent.pop() if adjacent else 0,
            non_adjacent.pop() if non_adjacent else 0,
        ),
    )


def walk_class_constants_dense(adjacency: list[set[int]], s: int) -> SwrgResult:
    """Reference implementation on an explicit adjacency structure: dense
    integer matrix power, no group structure assumed.  For small graphs and
    cross-checks (e.g. invariance under vertex relabeling)."""
    n = len(adjacency)
    mat = [[1 if j in adjacency[i] else 0 for j in range(n)] for i in range(n)]
    power = [row[:] for row in mat]
    for _ in range(s - 1):
        power = [
            [sum(row[t] * mat[t][j] for t in range(n)) for j in range(n)]
            for row in power
        ]
    equal = {power[i][i] for i in range(n)}
    adj = {power[i][j] for i in range(n) for j in adjacency[i]}
    non = {
        power[i][j]
        for i in range(n)
        for j in range(n)
        if i != j and j not in adjacency[i]
    }
    if len(equal) > 1 or len(adj) > 1 or len(non) > 1:
        return SwrgResult(False, s, None)
    return SwrgResult(True, s, (equal.pop(), adj.pop() if adj else 0, non.pop() if non else 0))


def tss_check(omega: Iterable[Sequence[int]], q: int, k: int) -> TssInstance:
    """Count ordered representations h = x + y + z over Omega^3 directly.

    Omega must be scalar-closed and must not contain 0.  Returns the two
    constants if the counts are constant on Omega and on its complement,
    otherwise a witness pair of group elements with differing counts.
    """
    vecs = {tuple(e % q for e in v) for v in omega}
    if tuple([0] * k) in vecs:
        raise ZeroInOmega("0 must not belong to a triple sum set")
    for v in vecs:
        for lam in range(2, q):
            if tuple((lam * e) % q for e in v) not in vecs:
                raise ValueError(f"omega is not closed under scalar multiplication at {v}")
    m = len(vecs)
    if m**3 > TSS_GUARD:
        raise GuardExceeded("|Omega|^3 over guard")
    codes = sorted(encode_vector(v, q) for v in vecs)
    size = q**k
    graph = CosetGraph(q, k, codes)  # reuse the group shift tables
    counts = [0] * size
    if q == 2:
        for x in codes:
            for y in codes:
                xy = x ^ y
                for z in codes:
                    counts[xy ^ z] += 1
    else:
        shift = graph._shift
        for x in codes:
            for y in codes:
                xy = shift[y][x]
                for z in codes:
                    counts[shift[z][xy]] += 1
    omega_set = set(codes)
    in_omega = {counts[h] for h in codes}
    out_omega = {counts[h] for h in range(1, size) if h not in omega_set}
    if len(in_omega) > 1 or len(out_omega) > 1:
        bad_class = codes if len(in_omega) > 1 else [
            h for h in range(1, size) if h not in omega_set
        ]
        vals = sorted({counts[h] for h in bad_class})
        w1 = next(h for h in bad_class if counts[h] == vals[0])
        w2 = next(h for h in bad_class if counts[h] == vals[-1])
        return TssInstance(
            m, False, None, None,
            (decode_vector(w1, q, k), decode_vector(w2, q, k)),
        )
    return TssInstance(
        m,
        True,
        in_omega.pop() if in_omega else None,
        out_omega.pop() if out_omega else None,  # None: the class is empty
    )


def triple_counts_by_convolution(omega: Iterable[Sequence[int]], q: int, k: int) -> list[int]:
    """Independent oracle for the tss counts: threefold group convolution of
    the indicator vector of Omega."""
    codes = [encode_vector(tuple(e % q for e in v), q) for v in omega]
    graph = CosetGraph(q, k, codes)
    return graph.walk_counts(3)
