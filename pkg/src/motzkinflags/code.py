"""Flag codes: minimum distance, distance-vector sets and projected codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import DuplicateFlagError, TypeMismatchError, UndefinedSetError
from .flag import Flag, TypeVector, distance_vector, max_flag_distance
from .motzkin import area_count


@dataclass(frozen=True)
class FlagCode:
    flags: tuple[Flag, ...]

    def __post_init__(self):
        flags = tuple(self.flags)
        object.__setattr__(self, "flags", flags)
        if not flags:
            raise ValueError("a flag code must contain at least one flag")
        t, q = flags[0].type, flags[0].q
        for k, f in enumerate(flags, 1):
            if f.type != t or f.q != q:
                raise TypeMismatchError(f"flag {k} has type {f.type.dims} over F_{f.q}, expected {t.dims} over F_{q}")
        seen: dict[Flag, int] = {}
        for k, f in enumerate(flags, 1):
            if f in seen:
                raise DuplicateFlagError(f"flag {k} duplicates flag {seen[f]}")
            seen[f] = k

    @classmethod
    def of(cls, flags: Iterable[Flag]) -> FlagCode:
        return cls(tuple(flags))

    @property
    def type(self) -> TypeVector:
        return self.flags[0].type

    @property
    def q(self) -> int:
        return self.flags[0].q

    @property
    def n(self) -> int:
        return self.type.n

    def __len__(self) -> int:
        return len(self.flags)


def pairwise_vectors(c: FlagCode) -> dict[tuple[int, int], tuple[int, ...]]:
    """Distance vector of every pair ``(j, k)``, ``j < k``, 1-based flag indices."""
    return {
        (j + 1, k + 1): distance_vector(c.flags[j], c.flags[k])
        for j, k in itertools.combinations(range(len(c)), 2)
    }


def min_distance(c: FlagCode) -> int:
    if len(c) == 1:
        return 0
    return min(sum(v) for v in pairwise_vectors(c).values())


def distance_vector_set(c: FlagCode) -> frozenset[tuple[int, ...]]:
    """Distance vectors of the pairs that attain the minimum distance."""
    if len(c) < 2:
        raise UndefinedSetError("the distance-vector set of a single-flag code is undefined")
    vecs = pairwise_vectors(c).values()
    d = min(sum(v) for v in vecs)
    return frozenset(v for v in vecs if sum(v) == d)


def projected_sizes(c: FlagCode) -> tuple[int, ...]:
    return tuple(len({f.subspaces[i] for f in c.flags}) for i in range(len(c.type)))


def is_disjoint(c: FlagCode) -> bool:
    return all(s == len(c) for s in projected_sizes(c))


def max_distance(c: FlagCode) -> int:
    return max_flag_distance(c.type)


def potential_vector_count(n: int, d: int) -> int:
    """Distance vectors on F_q^n with component sum ``d``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return area_count(n, d)


def disjoint_vector_count(n: int, d: int) -> int:
    """Zero-free distance vectors on F_q^n with component sum ``d``.

    Subtracting the all-ones vector leaves a distance vector on F_q^{n-2}
    with sum ``d - (n - 1)``.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if n < 2 or d < n - 1:
        return 0
    return area_count(n - 2, d - n + 1)
