"""Motzkin words over {U, H, D} and the sequences that count them.

Words are read left to right as lattice steps U=(1,1), H=(1,0), D=(1,-1)
from (0,0).  All counts are exact Python integers.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import AlphabetError, ImbalanceError, NotAPathError

ALPHABET = "UHD"
STEP = {"U": 1, "H": 0, "D": -1}


class MotzkinWord(str):
    """A validated Motzkin word.  Compares equal to the plain string."""

    def __new__(cls, letters: str = ""):
        letters = str(letters)
        h = 0
        for i, c in enumerate(letters, 1):
            if c not in STEP:
                raise AlphabetError(f"letter {c!r} at position {i} is not one of U, H, D", i)
            h += STEP[c]
            if h < 0:
                raise NotAPathError(f"prefix of length {i} has more D than U; the path drops below the axis", i)
        if h:
            raise ImbalanceError(f"word has {h} more U than D; the path ends at height {h}")
        return super().__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters: str) -> MotzkinWord:
        return str.__new__(cls, letters)

    def __repr__(self) -> str:
        return f"MotzkinWord({str(self)!r})"


def validate_word(s: str) -> MotzkinWord:
    return MotzkinWord(s)


class PathClass(enum.Enum):
    ALL = "all"
    ELEVATED = "elevated"
    RIORDAN = "riordan"


@dataclass(frozen=True)
class Classification:
    elevated: bool
    riordan: bool


def heights(w: str) -> tuple[int, ...]:
    hs = [0]
    for c in w:
        hs.append(hs[-1] + STEP[c])
    return tuple(hs)


def area(w: str) -> int:
    hs = heights(w)
    return sum(a + b for a, b in zip(hs, hs[1:])) // 2


def returns(w: str) -> frozenset[int]:
    hs = heights(w)
    return frozenset(i for i in range(1, len(w)) if hs[i] == 0)


def is_elevated(w: str) -> bool:
    # length 0 and 1 are excluded so that the class is counted by M_{n-2}
    return len(w) >= 2 and not returns(w)


def is_riordan(w: str) -> bool:
    hs = heights(w)
    return not any(c == "H" and hs[i] == 0 for i, c in enumerate(w))


def classify(w: str) -> Classification:
    return Classification(elevated=is_elevated(w), riordan=is_riordan(w))


@lru_cache(maxsize=None)
def _max_tail_area2(r: int, h: int) -> int:
    """Largest doubled area of ``r`` steps from height ``h`` down to 0."""
    if r == h:
        return h * h
    if r - h >= 2:
        return (2 * h + 1) + _max_tail_area2(r - 1, h + 1)
    return 2 * h + _max_tail_area2(r - 1, h)


def enumerate_paths(
    n: int, path_class: PathClass | str = PathClass.ALL, area_filter: int | None = None
) -> Iterator[MotzkinWord]:
    """Yield the Motzkin words of length ``n`` in lexicographic order U < H < D.

    ``path_class`` restricts to elevated or Riordan words; ``area_filter``
    keeps only words of that area.  The search prunes dead branches, so every
    visited prefix extends to at least one emitted word when no area filter
    is set.
    """
    path_class = PathClass(path_class)
    if n < 0:
        return
    if path_class is PathClass.ELEVATED and n < 2:
        return
    elevated = path_class is PathClass.ELEVATED
    riordan = path_class is PathClass.RIORDAN
    target2 = None if area_filter is None else 2 * area_filter
    if target2 is not None and not 0 <= target2 <= _max_tail_area2(n, 0):
        return

    # stack entries: (prefix, height, doubled area so far); pushed D, H, U so U pops first
    stack: list[tuple[str, int, int]] = [("", 0, 0)]
    pop, push = stack.pop, stack.append
    while stack:
        prefix, h, a2 = pop()
        i = len(prefix)
        if i == n:
            if target2 is None or a2 == target2:
                yield MotzkinWord._trusted(prefix)
            continue
        r = n - i - 1  # steps left after this one
        for c, nh in (("D", h - 1), ("H", h), ("U", h + 1)):
            if nh < 0 or nh > r:
                continue
            if elevated and nh == 0 and r > 0:
                continue
            if riordan and c == "H" and h == 0:
                continue
            na2 = a2 + h + nh
            if target2 is not None:
                if na2 + nh * nh > target2 or na2 + _max_tail_area2(r, nh) < target2:
                    continue
            push((prefix + c, nh, na2))


# -- counting ----------------------------------------------------------------

_lock = threading.Lock()
_motzkin: list[int] = [1]
_catalan: list[int] = [1]


def motzkin_number(n: int) -> int:
    """M_n by M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-k-2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with _lock:
        m = _motzkin
        while len(m) <= n:
            j = len(m)
            m.append(m[j - 1] + sum(m[k] * m[j - k - 2] for k in range(j - 1)))
        return m[n]


def catalan_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    with _lock:
        c = _catalan
        while len(c) <= n:
            j = len(c)
            c.append(sum(c[k] * c[j - k - 1] for k in range(j)))
        return c[n]


def elevated_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0 if n < 2 else motzkin_number(n - 2)


@lru_cache(maxsize=None)
def riordan_number(n: int) -> int:
    """Motzkin words of length ``n`` with no H step at height 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ways = {0: 1}
    for i in range(n):
        r = n - i - 1
        nxt: dict[int, int] = {}
        for h, c in ways.items():
            for nh in (h - 1, h + 1) if h == 0 else (h - 1, h, h + 1):
                if 0 <= nh <= r:
                    nxt[nh] = nxt.get(nh, 0) + c
        ways = nxt
    return ways.get(0, 0)


def max_area(n: int) -> int:
    return n * n // 4


@lru_cache(maxsize=None)
def area_distribution(n: int) -> tuple[int, ...]:
    """``(T(n,0), ..., T(n, floor(n^2/4)))``: Motzkin words of length n by area.

    Dynamic programme over (height, doubled accumulated area), one step at
    a time.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    for i in range(n):
        r = n - i - 1
        nxt: dict[tuple[int, int], int] = {}
        for (h, a2), c in states.items():
            for nh in (h - 1, h, h + 1):
                if 0 <= nh <= r:
                    key = (nh, a2 + h + nh)
                    nxt[key] = nxt.get(key, 0) + c
        states = nxt
    out = [0] * (max_area(n) + 1)
    for (h, a2), c in states.items():
        out[a2 // 2] += c
    return tuple(out)


def area_count(n: int, k: int) -> int:
    """T(n, k): number of Motzkin words of length ``n`` and area ``k``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    dist = area_distribution(n)
    return dist[k] if k < len(dist) else 0


def extremal_word(n: int) -> MotzkinWord:
    """The unique word of maximal area: U^k D^k or U^k H D^k."""
    k = n // 2
    return MotzkinWord("U" * k + "H" * (n % 2) + "D" * k)
