"""Subspaces of F_q^n and the injection / subspace metrics on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import gf
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class Subspace:
    """A subspace held as its canonical basis: the RREF with zero rows removed.

    Two ``Subspace`` values compare equal exactly when they are the same
    subspace.  Build them with :meth:`span` unless the basis is already
    canonical.
    """

    basis: gf.Matrix

    def __post_init__(self):
        reduced, r = gf.rref(self.basis)
        if reduced != self.basis:
            raise ValueError("basis is not in reduced row echelon form; use Subspace.span")

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], q: int, n: int) -> Subspace:
        m = gf.Matrix.from_rows(((x % q for x in v) for v in vectors), q, n)
        return cls(gf.rref(m)[0])

    @classmethod
    def zero(cls, q: int, n: int) -> Subspace:
        return cls(gf.Matrix((), q, n))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def ambient(self) -> int:
        return self.basis.cols

    @property
    def q(self) -> int:
        return self.basis.q

    def __contains__(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatchError(f"vector of length {len(v)} in F_q^{self.ambient}")
        return gf.in_row_space(v, self.basis)

    def __le__(self, other: Subspace) -> bool:
        return dim_sum(self, other) == other.dim

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(gf.rref(self.basis.stack(other.basis))[0])

    def extend(self, v: Sequence[int]) -> Subspace:
        return Subspace.span(self.basis.rows + (tuple(v),), self.q, self.ambient)

    def elements(self) -> Iterator[gf.Row]:
        """Every vector of the subspace; ``q**dim`` of them."""
        q, rows = self.q, self.basis.rows
        for coeffs in itertools.product(range(q), repeat=len(rows)):
            v = [0] * self.ambient
            for c, r in zip(coeffs, rows):
                if c:
                    v = [(x + c * y) % q for x, y in zip(v, r)]
            yield tuple(v)

    def __str__(self) -> str:
        if not self.dim:
            return "<0>"
        return "<" + ", ".join("".join(map(str, r)) if self.q < 10 else str(r) for r in self.basis.rows) + ">"


def _check(u: Subspace, v: Subspace) -> None:
    if u.ambient != v.ambient or u.q != v.q:
        raise DimensionMismatchError(
            f"subspaces live in different spaces: F_{u.q}^{u.ambient} vs F_{v.q}^{v.ambient}"
        )


def dim_sum(u: Subspace, v: Subspace) -> int:
    _check(u, v)
    return gf.stack_rank(u.basis, v.basis)


def dim_intersection(u: Subspace, v: Subspace) -> int:
    # modular law; no intersection basis is ever built
    return u.dim + v.dim - dim_sum(u, v)


def injection_distance(u: Subspace, v: Subspace) -> int:
    return max(u.dim, v.dim) - dim_intersection(u, v)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    s = dim_sum(u, v)
    return s - (u.dim + v.dim - s)


def grassmannian(k: int, n: int, q: int) -> Iterator[Subspace]:
    """Enumerate every ``k``-dimensional subspace of F_q^n.

    Walks pivot sets and fills the free (non-pivot, right-of-pivot) entries,
    so each subspace is produced exactly once, already in canonical form.
    """
    gf.check_modulus(q)
    if not 0 <= k <= n:
        return
    for pivots in itertools.combinations(range(n), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
        for fill in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, fill):
                rows[i][j] = x
            yield Subspace(gf.Matrix(tuple(map(tuple, rows)), q, n))
