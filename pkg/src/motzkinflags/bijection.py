"""Distance vectors <-> Motzkin words, and the area decompositions behind it.

``psi`` reads a distance vector as the interior heights of a lattice path;
``phi`` reads the heights back off.  Both are inverse bijections between
D(n) and M_n, and the path's area equals the vector's component sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthError, NotDisjointError
from .flag import DistanceVector
from .motzkin import MotzkinWord, area, heights, returns

_LETTER = {1: "U", 0: "H", -1: "D"}


def validate_distance_vector(components: Sequence[int], n: int) -> DistanceVector:
    if n < 2:
        raise LengthError(f"distance vectors need n >= 2, got n={n}")
    return DistanceVector(components, n)


def psi(v: Sequence[int]) -> MotzkinWord:
    v = v if isinstance(v, DistanceVector) else DistanceVector(v)
    padded = (0,) + tuple(v) + (0,)
    return MotzkinWord._trusted("".join(_LETTER[b - a] for a, b in zip(padded, padded[1:])))


def phi(w: str) -> DistanceVector:
    w = w if isinstance(w, MotzkinWord) else MotzkinWord(w)
    # u_i - d_i, counted directly rather than through heights()
    out = []
    u = d = 0
    for c in w[:-1]:
        u += c == "U"
        d += c == "D"
        out.append(u - d)
    return DistanceVector(out)


@dataclass(frozen=True)
class StripDecomposition:
    """Matched U/D pairs ``(i, j)`` (1-based positions) and their strip areas ``j - i``."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def areas(self) -> tuple[int, ...]:
        return tuple(j - i for i, j in self.pairs)

    @property
    def total(self) -> int:
        return sum(self.areas)


def strip_decomposition(w: str) -> StripDecomposition:
    w = w if isinstance(w, MotzkinWord) else MotzkinWord(w)
    open_: list[int] = []
    pairs = []
    for pos, c in enumerate(w, 1):
        if c == "U":
            open_.append(pos)
        elif c == "D":
            pairs.append((open_.pop(), pos))
    return StripDecomposition(tuple(sorted(pairs)))


def signed_position_sum(w: str) -> int:
    """Sum of D positions minus sum of U positions."""
    return sum(i for i, c in enumerate(w, 1) if c == "D") - sum(i for i, c in enumerate(w, 1) if c == "U")


@dataclass(frozen=True)
class LevelDecomposition:
    levels: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.levels)

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(lv) for lv in self.levels)


def level_decomposition(v: Sequence[int]) -> LevelDecomposition:
    """Split a zero-free distance vector into 0/1 layers: layer k marks components >= k."""
    v = v if isinstance(v, DistanceVector) else DistanceVector(v)
    if not v or min(v) == 0:
        raise NotDisjointError(f"vector {tuple(v)} has a zero component; levels need a disjoint pair")
    return LevelDecomposition(tuple(tuple(int(d >= k) for d in v) for k in range(1, max(v) + 1)))


def elevated_factorization(w: str) -> list[MotzkinWord]:
    """Cut ``w`` at height-0 points into its elevated pieces; flat steps are dropped."""
    w = w if isinstance(w, MotzkinWord) else MotzkinWord(w)
    hs = heights(w)
    cuts = [0] + sorted(returns(w)) + [len(w)]
    return [
        MotzkinWord._trusted(w[a:b])
        for a, b in zip(cuts, cuts[1:])
        if b - a >= 2 and hs[a + 1] > 0
    ]


def factor_areas(w: str) -> list[tuple[MotzkinWord, int]]:
    return [(f, area(f)) for f in elevated_factorization(w)]
