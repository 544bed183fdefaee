"""Prime-field arithmetic and dense matrices over F_q.

Matrices hold plain ``int`` entries in ``[0, q)``; ``FieldElement`` exists for
callers that want operator arithmetic on single scalars.  Row reduction has a
bit-packed fast path for ``q = 2`` whose results are identical to the generic
path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, NotPrimeError

MAX_MODULUS = 1 << 16

Row = tuple[int, ...]


@lru_cache(maxsize=None)
def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def check_modulus(q: int) -> int:
    if not isinstance(q, int) or not is_prime(q) or q >= MAX_MODULUS:
        raise NotPrimeError(f"field size must be a prime below {MAX_MODULUS}, got {q!r}")
    return q


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not a residue mod {self.modulus}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise DimensionMismatchError("field elements from different fields")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def _make(self, v: int) -> FieldElement:
        return FieldElement(v % self.modulus, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        return self._make(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._make(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._make(o) * self.inverse()

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class Matrix:
    """A dense ``len(rows) x cols`` matrix over F_q."""

    rows: tuple[Row, ...]
    q: int
    cols: int

    def __post_init__(self):
        check_modulus(self.q)
        if self.cols < 1:
            raise ValueError("a matrix needs at least one column")
        for r in self.rows:
            if len(r) != self.cols:
                raise DimensionMismatchError(
                    f"row of length {len(r)} in a matrix with {self.cols} columns"
                )
            for x in r:
                if not 0 <= x < self.q:
                    raise ValueError(f"entry {x} is not a residue mod {self.q}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], q: int, cols: int | None = None) -> Matrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            cols = len(rows[0])
        return cls(rows, q, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def stack(self, other: Matrix) -> Matrix:
        _check_compatible(self, other)
        return Matrix(self.rows + other.rows, self.q, self.cols)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def identity(n: int, q: int) -> Matrix:
    return Matrix(tuple(unit_vector(i, n) for i in range(n)), q, n)


def unit_vector(i: int, n: int) -> Row:
    """The ``i``-th standard basis vector (0-based) of length ``n``."""
    return tuple(1 if j == i else 0 for j in range(n))


def _check_compatible(a: Matrix, b: Matrix) -> None:
    if a.cols != b.cols:
        raise DimensionMismatchError(f"column counts differ: {a.cols} vs {b.cols}")
    if a.q != b.q:
        raise DimensionMismatchError(f"fields differ: F_{a.q} vs F_{b.q}")


# -- q = 2 fast path ---------------------------------------------------------
# Column 0 is the most significant bit, so integer order matches lexicographic
# order of rows and the pivot of a row is its highest set bit.


def _pack(row: Row) -> int:
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def _unpack(v: int, n: int) -> Row:
    return tuple((v >> (n - 1 - j)) & 1 for j in range(n))


def _rref_gf2(packed: list[int]) -> list[int]:
    basis: list[int] = []
    for v in packed:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            top = v.bit_length() - 1
            basis = [b ^ v if (b >> top) & 1 else b for b in basis]
            basis.append(v)
    basis.sort(reverse=True)
    return basis


def _rank_gf2(packed: Iterable[int]) -> int:
    # xor basis keyed by leading bit
    lead: dict[int, int] = {}
    for v in packed:
        while v:
            top = v.bit_length() - 1
            b = lead.get(top)
            if b is None:
                lead[top] = v
                break
            v ^= b
    return len(lead)


# -- generic path --------------------------------------------------------------


def _rref_rows(rows: Sequence[Row], q: int, cols: int) -> list[list[int]]:
    work = [list(r) for r in rows]
    r0 = 0
    for c in range(cols):
        pivot = next((i for i in range(r0, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r0], work[pivot] = work[pivot], work[r0]
        prow = work[r0]
        inv = pow(prow[c], -1, q)
        if inv != 1:
            prow = [(x * inv) % q for x in prow]
            work[r0] = prow
        for i in range(len(work)):
            if i != r0 and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % q for x, y in zip(work[i], prow)]
        r0 += 1
        if r0 == len(work):
            break
    return work[:r0]


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of ``m`` with zero rows dropped, and its rank."""
    if m.q == 2:
        basis = _rref_gf2([_pack(r) for r in m.rows])
        rows = tuple(_unpack(v, m.cols) for v in basis)
    else:
        rows = tuple(tuple(r) for r in _rref_rows(m.rows, m.q, m.cols))
    return Matrix(rows, m.q, m.cols), len(rows)


def rank(m: Matrix) -> int:
    if m.q == 2:
        return _rank_gf2(_pack(r) for r in m.rows)
    return len(_rref_rows(m.rows, m.q, m.cols))


def stack_rank(a: Matrix, b: Matrix) -> int:
    """Rank of ``a`` stacked on top of ``b``."""
    _check_compatible(a, b)
    if a.q == 2:
        return _rank_gf2([_pack(r) for r in a.rows] + [_pack(r) for r in b.rows])
    return len(_rref_rows(a.rows + b.rows, a.q, a.cols))


def pivot_columns(reduced: Matrix) -> list[int]:
    """Pivot column of each row of a matrix already in reduced echelon form."""
    return [next(j for j, x in enumerate(r) if x) for r in reduced.rows]


def reduce_vector(v: Sequence[int], reduced: Matrix) -> Row:
    """Residue of ``v`` after clearing the pivots of the echelon matrix ``reduced``.

    The residue is zero exactly when ``v`` lies in the row space.
    """
    q = reduced.q
    w = [x % q for x in v]
    for r, c in zip(reduced.rows, pivot_columns(reduced)):
        f = w[c]
        if f:
            w = [(x - f * y) % q for x, y in zip(w, r)]
    return tuple(w)


def in_row_space(v: Sequence[int], reduced: Matrix) -> bool:
    return not any(reduce_vector(v, reduced))
