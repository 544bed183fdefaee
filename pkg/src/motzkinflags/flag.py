"""Flags of a fixed type, flag distance and distance vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import gf
from .errors import (
    DomainError,
    InvalidFlagError,
    LengthError,
    NotADistanceVectorError,
    TypeMismatchError,
)
from .subspace import Subspace, injection_distance


@dataclass(frozen=True)
class TypeVector:
    dims: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if self.n < 2:
            raise ValueError(f"ambient dimension must be at least 2, got {self.n}")
        if not self.dims:
            raise ValueError("a type vector needs at least one dimension")
        if any(b <= a for a, b in zip(self.dims, self.dims[1:])):
            raise ValueError(f"type {self.dims} is not strictly increasing")
        if self.dims[0] < 1 or self.dims[-1] > self.n - 1:
            raise ValueError(f"type {self.dims} leaves the range 1..{self.n - 1}")

    @classmethod
    def full(cls, n: int) -> TypeVector:
        return cls(tuple(range(1, n)), n)

    @property
    def is_full(self) -> bool:
        return self.dims == tuple(range(1, self.n))

    def __len__(self) -> int:
        return len(self.dims)


class DistanceVector(tuple):
    """Per-dimension injection distances of two full flags on F_q^n.

    A tuple ``(d_1, ..., d_{n-1})`` of non-negative integers whose consecutive
    entries differ by at most one, with implicit zeros at both ends.
    """

    def __new__(cls, components: Iterable[int], n: int | None = None):
        comps = tuple(int(x) for x in components)
        if n is not None and len(comps) != n - 1:
            raise LengthError(f"a distance vector on F_q^{n} has {n - 1} components, got {len(comps)}")
        for i, d in enumerate(comps, 1):
            if d < 0:
                raise DomainError(f"component {i} is negative ({d})", i)
        padded = (0,) + comps + (0,)
        for i in range(1, len(padded)):
            if abs(padded[i] - padded[i - 1]) > 1:
                raise NotADistanceVectorError(
                    f"step {i} jumps from {padded[i - 1]} to {padded[i]};"
                    " consecutive components (with zero ends) must differ by at most 1",
                    i,
                )
        return super().__new__(cls, comps)

    @property
    def n(self) -> int:
        return len(self) + 1

    @property
    def distance(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"DistanceVector({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


@dataclass(frozen=True)
class Flag:
    type: TypeVector
    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "subspaces", tuple(self.subspaces))
        t = self.type
        if len(self.subspaces) != len(t):
            raise InvalidFlagError(f"type {t.dims} needs {len(t)} subspaces, got {len(self.subspaces)}")
        q = self.subspaces[0].q
        for i, (s, k) in enumerate(zip(self.subspaces, t.dims), 1):
            if s.ambient != t.n or s.q != q:
                raise InvalidFlagError(f"subspace {i} does not live in F_{q}^{t.n}")
            if s.dim != k:
                raise InvalidFlagError(f"subspace {i} has dimension {s.dim}, type requires {k}")
        for i in range(1, len(self.subspaces)):
            if not self.subspaces[i - 1] <= self.subspaces[i]:
                raise InvalidFlagError(f"subspace {i} is not contained in subspace {i + 1}")

    @classmethod
    def from_matrices(
        cls, matrices: Sequence[Sequence[Sequence[int]]], q: int, n: int, dims: Sequence[int] | None = None
    ) -> Flag:
        subs = tuple(Subspace.span(m, q, n) for m in matrices)
        if dims is None:
            dims = [s.dim for s in subs]
        return cls(TypeVector(tuple(dims), n), subs)

    @classmethod
    def from_adapted_basis(cls, rows: Sequence[Sequence[int]], q: int) -> Flag:
        """Full flag whose ``i``-th subspace is spanned by the first ``i`` rows."""
        n = len(rows[0])
        if len(rows) != n - 1:
            raise InvalidFlagError(f"an adapted basis on F_q^{n} has {n - 1} rows, got {len(rows)}")
        return cls(TypeVector.full(n), tuple(Subspace.span(rows[:i], q, n) for i in range(1, n)))

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def q(self) -> int:
        return self.subspaces[0].q

    def __getitem__(self, i: int) -> Subspace:
        """The ``i``-th subspace, 1-based."""
        if not 1 <= i <= len(self.subspaces):
            raise IndexError(i)
        return self.subspaces[i - 1]

    def __len__(self) -> int:
        return len(self.subspaces)


def _check_types(f: Flag, g: Flag) -> None:
    if f.type != g.type or f.q != g.q:
        raise TypeMismatchError(
            f"flags of type {f.type.dims} on F_{f.q}^{f.n} and {g.type.dims} on F_{g.q}^{g.n}"
        )


def distance_vector(f: Flag, g: Flag) -> tuple[int, ...]:
    """Componentwise injection distances; a ``DistanceVector`` for full flags."""
    _check_types(f, g)
    comps = tuple(injection_distance(a, b) for a, b in zip(f.subspaces, g.subspaces))
    if f.type.is_full:
        return DistanceVector(comps, f.n)
    return comps


def flag_distance(f: Flag, g: Flag) -> int:
    return sum(distance_vector(f, g))


def collapse_points(f: Flag, g: Flag) -> frozenset[int]:
    _check_types(f, g)
    return frozenset(i for i, (a, b) in enumerate(zip(f.subspaces, g.subspaces), 1) if a == b)


def max_flag_distance(t: TypeVector) -> int:
    half = t.n // 2
    return sum(k if k <= half else t.n - k for k in t.dims)


def full_flags(n: int, q: int) -> Iterator[Flag]:
    """Every full flag on F_q^n.  There are prod_{i=1}^{n} (q^i - 1)/(q - 1) of them."""
    gf.check_modulus(q)
    t = TypeVector.full(n)
    vectors = [v for v in itertools.product(range(q), repeat=n) if any(v)]

    def extend(chain: list[Subspace]) -> Iterator[list[Subspace]]:
        if len(chain) == n - 1:
            yield chain
            return
        top = chain[-1] if chain else Subspace.zero(q, n)
        seen = set()
        for v in vectors:
            if v in top:
                continue
            nxt = top.extend(v)
            if nxt in seen:
                continue
            seen.add(nxt)
            yield from extend(chain + [nxt])

    for chain in extend([]):
        yield Flag(t, tuple(chain))

