import pytest
from hypothesis import given
from hypothesis import strategies as st

from motzkinflags.errors import AlphabetError, ImbalanceError, NotAPathError
from motzkinflags.motzkin import (
    MotzkinWord,
    PathClass,
    area,
    area_count,
    area_distribution,
    catalan_number,
    classify,
    elevated_number,
    enumerate_paths,
    extremal_word,
    heights,
    motzkin_number,
    returns,
    riordan_number,
    validate_word,
)
from oracles import trapezoid_area, words_bruteforce
from reference_tables import AREA_TABLE, MOTZKIN_FIRST_TEN


def test_validate_word_accepts():
    assert validate_word("UUHUDDHDH") == "UUHUDDHDH"
    assert validate_word("") == ""


def test_validate_word_rejects_prefix():
    with pytest.raises(NotAPathError) as err:
        validate_word("DU")
    assert err.value.index == 1
    with pytest.raises(NotAPathError) as err:
        validate_word("UDDU")
    assert err.value.index == 3


def test_validate_word_rejects_imbalance():
    with pytest.raises(ImbalanceError):
        validate_word("UH")


def test_validate_word_rejects_alphabet():
    with pytest.raises(AlphabetError) as err:
        validate_word("UXD")
    assert err.value.index == 2


@pytest.mark.parametrize(
    "w, hs",
    [("UUHUDDHDH", (0, 1, 2, 2, 3, 2, 1, 1, 0, 0)), ("H", (0, 0)), ("UD", (0, 1, 0))],
)
def test_heights(w, hs):
    assert heights(w) == hs


@pytest.mark.parametrize("w, a", [("UUHUDDHDH", 12), ("UUUDDUHDD", 14), ("HHH", 0), ("UUDDUUHDD", 10)])
def test_area(w, a):
    assert area(w) == a


@pytest.mark.parametrize("w, r", [("UUDDUUHDD", {4}), ("UUHUDDHD", set()), ("HH", {1}), ("UDUD", {2})])
def test_returns(w, r):
    assert returns(w) == r


def test_classify():
    assert classify("UUHUDDHD").elevated
    c = classify("UUDDUUHDD")
    assert not c.elevated and c.riordan
    c = classify("HHHH")
    assert not c.elevated and not c.riordan
    assert classify("UHD").riordan  # H above the axis is allowed
    assert not classify("H").elevated


def test_enumerate_examples():
    assert list(enumerate_paths(2)) == ["UD", "HH"]
    assert len(list(enumerate_paths(4, area_filter=2))) == 3
    assert list(enumerate_paths(3, PathClass.ELEVATED)) == ["UHD"]
    assert list(enumerate_paths(0)) == [""]
    assert list(enumerate_paths(1, "elevated")) == []
    assert list(enumerate_paths(4, area_filter=99)) == []


@pytest.mark.parametrize("n", range(0, 10))
def test_enumeration_matches_bruteforce_in_order(n):
    assert list(enumerate_paths(n)) == words_bruteforce(n)


@pytest.mark.parametrize("n", range(0, 10))
def test_filtered_enumeration_matches_bruteforce(n):
    brute = words_bruteforce(n)
    for k in range(n * n // 4 + 2):
        assert list(enumerate_paths(n, area_filter=k)) == [w for w in brute if trapezoid_area(w) == k]
    assert list(enumerate_paths(n, PathClass.RIORDAN)) == [w for w in brute if classify(w).riordan]
    assert list(enumerate_paths(n, PathClass.ELEVATED)) == [w for w in brute if classify(w).elevated]


def test_motzkin_numbers():
    assert [motzkin_number(n) for n in range(10)] == MOTZKIN_FIRST_TEN
    assert motzkin_number(10) == 2188
    assert catalan_number(0) == 1


def test_catalan_numbers():
    assert [catalan_number(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_elevated_numbers():
    assert elevated_number(9) == 127
    assert elevated_number(0) == elevated_number(1) == 0
    assert elevated_number(2) == 1


def test_riordan_numbers():
    # first terms from brute-force enumeration (oracle run)
    assert [riordan_number(n) for n in range(11)] == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603]


@pytest.mark.parametrize("n", range(0, 40))
def test_riordan_motzkin_identity(n):
    assert riordan_number(n) + riordan_number(n + 1) == motzkin_number(n)


def test_area_count_table():
    for n, row in AREA_TABLE.items():
        assert [area_count(n, k) for k in range(len(row))] == row
        assert area_count(n, len(row)) == 0
    assert area_count(8, 5) == 41
    assert area_count(7, 3) == 20


@pytest.mark.parametrize("n", range(0, 25))
def test_area_count_invariants(n):
    assert area_count(n, 0) == 1
    assert area_count(n, n * n // 4) == 1
    assert sum(area_distribution(n)) == motzkin_number(n)
    assert area(extremal_word(n)) == n * n // 4


def test_extremal_word_shapes():
    assert extremal_word(6) == "UUUDDD"
    assert extremal_word(7) == "UUUHDDD"


def test_dyck_subcase_counts_catalan():
    for n in range(7):
        assert sum("H" not in w for w in enumerate_paths(2 * n)) == catalan_number(n)


def test_big_counts_are_exact():
    # M_100 from the recurrence, compared with the central trinomial-style sum
    from math import comb

    m100 = sum(comb(100, 2 * k) * comb(2 * k, k) // (k + 1) for k in range(51))
    assert motzkin_number(100) == m100


motzkin_words = st.integers(0, 12).flatmap(
    lambda n: st.sampled_from(words_bruteforce(n)) if n <= 8 else st.sampled_from(list(enumerate_paths(n)))
)


@given(motzkin_words)
def test_word_invariants(w):
    hs = heights(w)
    assert hs[0] == hs[-1] == 0 and min(hs) >= 0
    assert 0 <= area(w) <= len(w) ** 2 // 4
    assert area(w) == trapezoid_area(w)
    assert (not returns(w) and len(w) >= 2) == classify(w).elevated
    assert MotzkinWord(w) == w
