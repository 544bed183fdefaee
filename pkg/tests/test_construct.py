import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkinflags.bijection import phi
from motzkinflags.construct import FlagPair, realize, verify_pair
from motzkinflags.errors import NotADistanceVectorError, NotPrimeError
from motzkinflags.flag import collapse_points, distance_vector, flag_distance
from motzkinflags.motzkin import enumerate_paths


def test_zero_vector_gives_identical_flags():
    for q in (2, 3, 7):
        p = realize((0, 0, 0, 0), q)
        assert p.first == p.second
        assert flag_distance(p.first, p.second) == 0


def test_realize_1_1_0():
    p = realize((1, 1, 0), 2)
    assert distance_vector(p.first, p.second) == (1, 1, 0)
    assert verify_pair(p, (1, 1, 0))


def test_realize_1_2_1_is_disjoint_at_max_distance():
    p = realize((1, 2, 1), 2)
    assert distance_vector(p.first, p.second) == (1, 2, 1)
    assert collapse_points(p.first, p.second) == set()
    assert flag_distance(p.first, p.second) == 16 // 4


def test_verify_pair_rejects():
    p = realize((0, 0, 0), 2)
    assert not verify_pair(p, (1, 0, 0))
    assert not verify_pair(p, (0, 0))


def test_verify_pair_on_worked_flags(code_three):
    _, f2, f3 = code_three.flags
    assert verify_pair(FlagPair(f2, f3), (1, 1, 0))


def test_invalid_inputs():
    with pytest.raises(NotADistanceVectorError):
        realize((0, 2, 0), 2)
    with pytest.raises(NotPrimeError):
        realize((1, 1, 1), 4)


def test_deterministic():
    a, b = realize((1, 2, 2, 1, 1), 3), realize((1, 2, 2, 1, 1), 3)
    assert a == b
    assert [s.basis for s in a.first.subspaces] == [s.basis for s in b.first.subspaces]


@pytest.mark.parametrize("q", [2, 3, 5, 7])
@pytest.mark.parametrize("n", range(2, 7))
def test_realize_all_vectors(n, q):
    for w in enumerate_paths(n):
        v = phi(w)
        p = realize(v, q)
        assert verify_pair(p, v)
        assert collapse_points(p.first, p.second) == {i for i, d in enumerate(v, 1) if d == 0}
        assert p.first.type.is_full and p.q == q


@settings(max_examples=30, deadline=None)
@given(st.integers(8, 14).flatmap(lambda n: st.sampled_from(list(enumerate_paths(n, "elevated")))))
def test_realize_long_disjoint_vectors(w):
    v = phi(w)
    p = realize(v, 2)
    assert verify_pair(p, v)
    assert not collapse_points(p.first, p.second)
