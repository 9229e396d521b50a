"""MacWilliams transform machinery: Krawtchouk polynomials, dual weight
distributions, power moments, and the closed-form frequency solver for
binary three-weight codes.

All arithmetic is exact (integers and fractions).  Integrality of a dual
distribution is a *test* performed by callers, never an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DegenerateWeights


def binomial(x: int, nu: int) -> int:
    """C(x, nu) in the generalized sense: x(x-1)...(x-nu+1)/nu!.

    Defined for every integer x (also negative), so Krawtchouk values are
    defined at arbitrary integer arguments.
    """
    if nu < 0:
        return 0
    num = 1
    for i in range(nu):
        num *= x - i
    den = factorial(nu)
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def krawtchouk(i: int, x: int, n: int, q: int) -> int:
    """K_i(x) = sum_nu (-1)^nu C(x,nu) C(n-x,i-nu) (q-1)^(i-nu), exactly."""
    total = 0
    for nu in range(i + 1):
        term = binomial(x, nu) * binomial(n - x, i - nu) * (q - 1) ** (i - nu)
        total += -term if (nu & 1) else term
    return total


def krawtchouk_column(x: int, n: int, q: int, imax: int) -> list[int]:
    """[K_0(x), ..., K_imax(x)] via the three-term recurrence.

    (i+1) K_{i+1}(x) = ((q-1)(n-i) + i - qx) K_i(x) - (q-1)(n-i+1) K_{i-1}(x)
    """
    vals = [1]
    if imax >= 1:
        vals.append(n * (q - 1) - q * x)
    for i in range(1, imax):
        num = ((q - 1) * (n - i) + i - q * x) * vals[i] - (q - 1) * (n - i + 1) * vals[i - 1]
        quot, rem = divmod(num, i + 1)
        assert rem == 0
        vals.append(quot)
    return vals[: imax + 1]


def dual_distribution(counts: dict[int, int], n: int, q: int, k: int) -> list[Fraction]:
    """Dual weight distribution B_0..B_n from primal counts {weight: A_w}.

    B_i = (1/q^k) * sum_j K_i(j) A_j, returned as exact reduced fractions.
    Callers decide what integrality or nonnegativity means for them.
    """
    size = q**k
    acc = [0] * (n + 1)
    for w, a in counts.items():
        if a == 0:
            continue
        col = krawtchouk_column(w, n, q, n)
        for i in range(n + 1):
            acc[i] += a * col[i]
    return [Fraction(v, size) for v in acc]


def power_moment(counts: dict[int, int], nu: int) -> int:
    """sum_i i^nu A_i over the distribution."""
    return sum(a * i**nu for i, a in counts.items())


@dataclass(frozen=True)
class ThreeWeightSolution:
    """Frequencies forced on a putative projective three-weight code.

    The values are exact rationals; the tuple is arithmetically realizable
    only when the frequencies and b3 are nonnegative integers.
    """

    q: int
    n: int
    k: int
    weights: tuple[int, int, int]
    frequencies: tuple[Fraction, Fraction, Fraction]
    b3: Fraction
    y: int  # 2^(k-2); binary-only convenience

    def is_integral(self) -> bool:
        return all(f.denominator == 1 for f in self.frequencies) and self.b3.denominator == 1

    def is_realizable_arithmetic(self) -> bool:
        return self.is_integral() and all(f > 0 for f in self.frequencies) and self.b3 >= 0

    def counts(self) -> dict[int, int]:
        if not self.is_integral():
            raise ValueError("frequencies are not integral")
        d = {0: 1}
        for w, f in zip(self.weights, self.frequencies):
            d[w] = int(f)
        return d


def three_weight_solve(n: int, k: int, w1: int, w2: int, w3: int) -> ThreeWeightSolution:
    """Solve the first power moments of a binary projective [n,k] code with
    nonzero weights w1 < w2 < w3 for the frequencies and for B_3.

    When the frequencies come out as nonnegative integers the result is
    cross-checked against the full Krawtchouk transform (B_1 = B_2 = 0 and
    the same B_3 must reappear).
    """
    if len({w1, w2, w3}) != 3:
        raise DegenerateWeights(f"weights must be distinct, got {(w1, w2, w3)}")
    if not (1 <= w1 < w2 < w3 <= n):
        raise ValueError(f"need 1 <= w1 < w2 < w3 <= n, got {(w1, w2, w3)} with n={n}")
    if k < 2:
        raise ValueError("dimension must be at least 2 for a three-weight code")
    y = 1 << (k - 2)
    a1 = Fraction(
        y * (n * n - 2 * n * w2 - 2 * n * w3 + 4 * w2 * w3 + n) - w2 * w3,
        (w2 - w1) * (w3 - w1),
    )
    a2 = Fraction(
        y * (n * n - 2 * n * w1 - 2 * n * w3 + 4 * w1 * w3 + n) - w1 * w3,
        (w2 - w3) * (w2 - w1),
    )
    a3 = Fraction(
        y * (n * n - 2 * n * w1 - 2 * n * w2 + 4 * w1 * w2 + n) - w1 * w2,
        (w3 - w1) * (w3 - w2),
    )
    prod = w1 * w2 * w3
    b3_times_3 = (
        Fraction(n * n * (n + 3), 2)
        - (w1 + w2 + w3) * n * (n + 1)
        + 2 * (w1 * w2 + w1 * w3 + w2 * w3) * n
        - 4 * prod
        + Fraction(4 * prod, 1 << k)
    )
    b3 = b3_times_3 / 3
    sol = ThreeWeightSolution(2, n, k, (w1, w2, w3), (a1, a2, a3), b3, y)
    if sol.is_integral() and all(f >= 0 for f in sol.frequencies):
        b = dual_distribution(sol.counts(), n, 2, k)
        assert b[0] == 1 and b[1] == 0 and b[2] == 0
        assert b[3] == b3
    return sol


def pmt_frequencies(n: int, k: int, t: int) -> ThreeWeightSolution:
    """Frequencies for the symmetric binary weight triple (n/2-t, n/2, n/2+t).

    Must (and does, by assertion) agree with three_weight_solve on the same
    inputs.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if n % 2 != 0:
        raise ValueError("n must be even")
    w1, w2, w3 = n // 2 - t, n // 2, n // 2 + t
    if not (1 <= w1 and w3 <= n):
        raise ValueError(f"weights {(w1, w2, w3)} out of range for n={n}")
    y = 1 << (k - 2)
    a1 = Fraction(n * (4 * y - n - 2 * t), 8 * t * t)
    a2 = 4 * y - 1 - Fraction(n * (4 * y - n), 4 * t * t)
    a3 = Fraction(n * (4 * y - n + 2 * t), 8 * t * t)
    b3 = Fraction(n * (n - 2 * t) * (n + 2 * t), 8 * y) / 3
    sol = ThreeWeightSolution(2, n, k, (w1, w2, w3), (a1, a2, a3), b3, y)
    general = three_weight_solve(n, k, w1, w2, w3)
    assert sol.frequencies == general.frequencies and sol.b3 == general.b3
    return sol


def solve_three_weight_general(
    n: int, k: int, q: int, w1: int, w2: int, w3: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Frequencies forced by B_1 = B_2 = 0 for any prime power q.

    Solves the 3x3 linear system given by sum A_i = q^k - 1 together with
    the first two Krawtchouk moments, by Cramer's rule over the integers.
    """
    if len({w1, w2, w3}) != 3:
        raise DegenerateWeights(f"weights must be distinct, got {(w1, w2, w3)}")
    size = q**k
    ws = (w1, w2, w3)
    k1 = [n * (q - 1) - q * w for w in ws]
    k2 = [krawtchouk(2, w, n, q) for w in ws]
    rhs = (size - 1, -(n * (q - 1)), -krawtchouk(2, 0, n, q))
    m = [[1, 1, 1], k1, k2]

    def det3(a) -> int:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )

    d = det3(m)
    if d == 0:
        raise DegenerateWeights("moment system is singular")
    sols = []
    for col in range(3):
        mc = [list(row) for row in m]
        for r in range(3):
            mc[r][col] = rhs[r]
        sols.append(Fraction(det3(mc), d))
    return sols[0], sols[1], sols[2]
