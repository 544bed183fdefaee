"""Explicit pairs of full flags with a prescribed distance vector.

The two flags are grown one dimension at a time.  With ``W = F_i + F'_i``
and target step ``s = d_{i+1} - d_i``:

* ``s = 0, d_i = 0``: add one ``u`` outside ``W`` to both flags.
* ``s = 0, d_i > 0``: ``F`` gets ``u`` outside ``W``; ``F'`` gets ``u'`` in ``W`` but outside ``F'_i``.
* ``s = +1``: ``F`` gets ``u`` outside ``W``; ``F'`` gets ``u'`` outside ``W + <u>``.
* ``s = -1``: ``F`` gets ``u`` in ``F'_i`` but outside ``F_i``, and symmetrically for ``F'``.

Witnesses are chosen deterministically.  A vector outside a subspace is the
standard basis vector at its first non-pivot column; a vector of ``A``
outside ``B`` is the first canonical basis row of ``A`` not lying in ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf
from .flag import DistanceVector, Flag, TypeVector, distance_vector
from .subspace import Subspace


@dataclass(frozen=True)
class FlagPair:
    first: Flag
    second: Flag

    @property
    def n(self) -> int:
        return self.first.n

    @property
    def q(self) -> int:
        return self.first.q


def _outside(s: Subspace) -> gf.Row:
    pivots = set(gf.pivot_columns(s.basis)) if s.dim else set()
    j = next(j for j in range(s.ambient) if j not in pivots)
    return gf.unit_vector(j, s.ambient)


def _in_but_not(a: Subspace, b: Subspace) -> gf.Row:
    return next(r for r in a.basis.rows if r not in b)


def realize(v: Sequence[int], q: int) -> FlagPair:
    """Two full flags on F_q^n whose distance vector is ``v`` (n = len(v) + 1)."""
    gf.check_modulus(q)
    v = v if isinstance(v, DistanceVector) else DistanceVector(v)
    n = v.n
    deltas = (0,) + tuple(v)
    F = [Subspace.zero(q, n)]
    G = [Subspace.zero(q, n)]
    for i in range(n - 1):
        a, b = F[-1], G[-1]
        w = a + b
        step = deltas[i + 1] - deltas[i]
        if step == 0 and deltas[i] == 0:
            nxt = a.extend(_outside(w))
            F.append(nxt)
            G.append(nxt)
        elif step == 0:
            F.append(a.extend(_outside(w)))
            G.append(b.extend(_in_but_not(w, b)))
        elif step == 1:
            u = _outside(w)
            F.append(a.extend(u))
            G.append(b.extend(_outside(w.extend(u))))
        else:
            F.append(a.extend(_in_but_not(b, a)))
            G.append(b.extend(_in_but_not(a, b)))
    t = TypeVector.full(n)
    return FlagPair(Flag(t, tuple(F[1:])), Flag(t, tuple(G[1:])))


def verify_pair(p: FlagPair, v: Sequence[int]) -> bool:
    """Recompute the pair's distance vector from scratch and compare with ``v``."""
    if p.first.n != len(v) + 1:
        return False
    return tuple(distance_vector(p.first, p.second)) == tuple(v)
