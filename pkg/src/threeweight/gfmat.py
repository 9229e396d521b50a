"""Exact dense linear algebra over prime fields GF(p).

Everything is integer arithmetic mod p; there is no floating point anywhere
in this package.  Matrices are immutable; rows are stored as byte strings
(entries are always < 256 because only small primes are supported).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import UnsupportedParameters


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime p.  Extension fields GF(p^e), e > 1 are rejected."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise UnsupportedParameters(
                f"field order {self.p} is not prime; only prime fields are supported"
            )
        if self.p > 251:
            raise UnsupportedParameters("field order too large for byte-packed rows")

    @property
    def q(self) -> int:
        return self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return pow(a, self.p - 2, self.p)


GF2 = PrimeField(2)
GF3 = PrimeField(3)


class RrefResult(NamedTuple):
    reduced: "FieldMatrix"
    rank: int
    pivot_cols: tuple[int, ...]


class FieldMatrix:
    """Immutable matrix over GF(p), rows packed as bytes."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: PrimeField, rows: tuple[bytes, ...], ncols: int):
        if ncols < 1:
            raise ValueError("matrix must have at least one column")
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Iterable[Iterable[int]]) -> "FieldMatrix":
        packed = []
        ncols = None
        for row in rows:
            entries = bytes(int(e) % field.p for e in row)
            if ncols is None:
                ncols = len(entries)
            elif len(entries) != ncols:
                raise ValueError("ragged rows")
            packed.append(entries)
        if not packed or ncols is None or ncols == 0:
            raise ValueError("matrix must be nonempty")
        return cls(field, tuple(packed), ncols)

    @classmethod
    def from_columns(cls, field: PrimeField, cols: Iterable[Iterable[int]]) -> "FieldMatrix":
        cols = [tuple(int(e) % field.p for e in c) for c in cols]
        if not cols:
            raise ValueError("matrix must be nonempty")
        nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        return cls.from_rows(field, ((c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "FieldMatrix":
        return cls.from_rows(field, ((1 if i == j else 0 for j in range(n)) for i in range(n)))

    def row(self, i: int) -> bytes:
        return self._rows[i]

    def entry(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> Iterator[tuple[int, ...]]:
        for j in range(self.ncols):
            yield self.column(j)

    def to_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in self._rows)

    def row_masks(self) -> tuple[int, ...]:
        """Rows as bit masks (bit j = column j); GF(2) only."""
        if self.field.p != 2:
            raise ValueError("bit packing is only defined over GF(2)")
        masks = []
        for r in self._rows:
            m = 0
            for j, e in enumerate(r):
                if e:
                    m |= 1 << j
            masks.append(m)
        return tuple(masks)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.field,
            tuple(bytes(self.column(j)) for j in range(self.ncols)),
            self.nrows,
        )

    def mul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.field.p != other.field.p:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        p = self.field.p
        out = []
        ocols = other.ncols
        for r in self._rows:
            acc = [0] * ocols
            for j, e in enumerate(r):
                if e:
                    orow = other._rows[j]
                    for c in range(ocols):
                        acc[c] += e * orow[c]
            out.append(bytes(v % p for v in acc))
        return FieldMatrix(self.field, tuple(out), ocols)

    def is_zero(self) -> bool:
        return all(not any(r) for r in self._rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field.p == other.field.p
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"FieldMatrix(GF({self.field.p}), {self.nrows}x{self.ncols})"

    def rref(self) -> RrefResult:
        """Reduced row-echelon form, rank and pivot columns.

        Pivot choice is deterministic: first nonzero entry scanning rows
        top-down within the leftmost unreduced column.
        """
        p = self.field.p
        mat = [bytearray(r) for r in self._rows]
        nrows, ncols = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            pivot_row = None
            for i in range(r, nrows):
                if mat[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
            inv = self.field.inv(mat[r][c])
            if inv != 1:
                row_r = mat[r]
                for j in range(c, ncols):
                    if row_r[j]:
                        row_r[j] = (row_r[j] * inv) % p
            row_r = mat[r]
            for i in range(nrows):
                if i != r and mat[i][c]:
                    f = mat[i][c]
                    row_i = mat[i]
                    for j in range(c, ncols):
                        if row_r[j]:
                            row_i[j] = (row_i[j] - f * row_r[j]) % p
            pivots.append(c)
            r += 1
        reduced = FieldMatrix(self.field, tuple(bytes(row) for row in mat), ncols)
        return RrefResult(reduced, len(pivots), tuple(pivots))

    def rank(self) -> int:
        return self.rref().rank

    def kernel_basis(self) -> "FieldMatrix":
        """Basis of the right null space, one vector per row.

        The result has ncols(self) - rank(self) rows; zero rows means the
        kernel is trivial (the returned matrix then has nrows == 0).
        """
        p = self.field.p
        reduced, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            v = bytearray(self.ncols)
            v[f] = 1
            for row_idx, pcol in enumerate(pivots):
                coeff = reduced.entry(row_idx, f)
                if coeff:
                    v[pcol] = (-coeff) % p
            basis.append(bytes(v))
        return FieldMatrix(self.field, tuple(basis), self.ncols)
