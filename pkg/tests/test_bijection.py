import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motzkinflags.bijection import (
    elevated_factorization,
    factor_areas,
    level_decomposition,
    phi,
    psi,
    signed_position_sum,
    strip_decomposition,
    validate_distance_vector,
)
from motzkinflags.errors import DomainError, LengthError, NotADistanceVectorError, NotDisjointError
from motzkinflags.flag import distance_vector, full_flags
from motzkinflags.motzkin import area, classify, enumerate_paths, motzkin_number, returns
from oracles import distance_vectors_bruteforce, trapezoid_area


def test_validate_distance_vector():
    assert validate_distance_vector((1, 0, 1), 4) == (1, 0, 1)
    assert validate_distance_vector((1, 2, 2, 3, 2, 1, 1, 0), 9)
    with pytest.raises(NotADistanceVectorError) as err:
        validate_distance_vector((0, 2, 0), 4)
    assert err.value.index == 2
    with pytest.raises(LengthError):
        validate_distance_vector((1, 0), 4)
    with pytest.raises(DomainError):
        validate_distance_vector((0, -1, 0), 4)


@pytest.mark.parametrize(
    "v, w",
    [
        ((1, 2, 2, 3, 2, 1, 1, 0), "UUHUDDHDH"),
        ((0, 0, 0, 0), "HHHHH"),
        ((1, 2, 1, 0, 1, 2, 2, 1), "UUDDUUHDD"),
        ((1, 2, 3, 2, 1, 2, 2, 1), "UUUDDUHDD"),
    ],
)
def test_psi_phi_examples(v, w):
    assert psi(v) == w
    assert phi(w) == v


def test_phi_small():
    assert phi("HHHH") == (0, 0, 0)
    assert phi("UD") == (1,)


def test_strip_decomposition_example():
    s = strip_decomposition("UUUDDUHDD")
    assert set(s.pairs) == {(1, 9), (2, 5), (6, 8), (3, 4)}
    assert sorted(s.areas) == [1, 2, 3, 8]
    assert s.total == 14
    assert strip_decomposition("UD").pairs == ((1, 2),)
    assert strip_decomposition("UUHUDDHDH").total == 12


def test_level_decomposition_example():
    lv = level_decomposition((1, 2, 3, 2, 1, 2, 2, 1))
    assert lv.r == 3
    assert lv.levels == (
        (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 1, 1, 1, 0, 1, 1, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
    )
    assert lv.row_sums == (8, 5, 1)
    assert sum(lv.row_sums) == 14
    assert level_decomposition((1, 1, 1)).levels == ((1, 1, 1),)


def test_level_decomposition_rejects_zero():
    with pytest.raises(NotDisjointError):
        level_decomposition((1, 0, 1))


def test_elevated_factorization_examples():
    assert elevated_factorization("UUDDUUHDD") == ["UUDD", "UUHDD"]
    assert [a for _, a in factor_areas("UUDDUUHDD")] == [4, 6]
    assert elevated_factorization("HHH") == []
    assert elevated_factorization("UHD") == ["UHD"]
    assert elevated_factorization("HUDHHUHDH") == ["UD", "UHD"]


@pytest.mark.parametrize("n", range(2, 11))
def test_psi_is_a_bijection_onto_motzkin_words(n):
    vectors = distance_vectors_bruteforce(n)
    assert len(vectors) == motzkin_number(n)
    images = [psi(v) for v in vectors]
    assert sorted(images) == sorted(enumerate_paths(n))
    for v, w in zip(vectors, images):
        assert phi(w) == v
        assert area(w) == sum(v) == trapezoid_area(w)
        assert (min(v) >= 1) == classify(w).elevated
        no_double_zero = not any(a == b == 0 for a, b in zip((0,) + v, v + (0,)))
        assert no_double_zero == classify(w).riordan


@pytest.mark.parametrize("n", range(1, 13))
def test_strip_identity(n):
    for w in enumerate_paths(n):
        s = strip_decomposition(w)
        assert s.total == area(w) == signed_position_sum(w)
        assert sum(a for _, a in factor_areas(w)) == area(w)
        assert all(classify(f).elevated for f in elevated_factorization(w))


@pytest.mark.parametrize("n", range(2, 11))
def test_level_identity(n):
    for w in enumerate_paths(n, "elevated"):
        v = phi(w)
        lv = level_decomposition(v)
        assert sum(lv.row_sums) == sum(v)
        assert tuple(map(sum, zip(*lv.levels))) == tuple(v)


@pytest.mark.parametrize("n", [3, 4])
def test_ground_truth_over_f2(n):
    flags = list(full_flags(n, 2))
    realized = {tuple(distance_vector(f, g)) for f, g in itertools.product(flags, repeat=2)}
    assert realized == {tuple(phi(w)) for w in enumerate_paths(n)}
    assert len(realized) == motzkin_number(n)


@st.composite
def motzkin_words(draw, max_n=30):
    n = draw(st.integers(2, max_n))
    letters, h = [], 0
    for i in range(n):
        left = n - i - 1
        allowed = [c for c, nh in (("U", h + 1), ("H", h), ("D", h - 1)) if 0 <= nh <= left]
        c = draw(st.sampled_from(allowed))
        h += {"U": 1, "H": 0, "D": -1}[c]
        letters.append(c)
    return "".join(letters)


@given(motzkin_words())
def test_roundtrip_on_long_words(w):
    v = phi(w)
    assert psi(v) == w
    assert area(w) == sum(v) == strip_decomposition(w).total
    assert returns(w) == {i for i, d in enumerate(v, 1) if d == 0}
