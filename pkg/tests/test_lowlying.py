from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pantsarc.intersect import self_intersection
from pantsarc.lowlying import (
    FAMILIES,
    UnsupportedFamily,
    continued_fraction_value,
    covering_family,
    decompose,
    family_intersections,
    family_quotients,
    family_word,
    in_value_set,
    load_reference_words,
    pattern_low_lying,
    value_set_members,
    witness,
)
from pantsarc.words import parse_word


def test_ladder_families_close_forms():
    for n in range(11):
        assert self_intersection(family_word("F1", n)) == n
        assert self_intersection(family_word("F2", n)) == n * n + 2 * n
        assert self_intersection(family_word("F3", n)) == n
        assert self_intersection(family_word("F4", n)) == n * n + 3 * n + 1


def test_ladder_family_words():
    assert str(family_word("F1", 2)) == "1BABA2"
    assert str(family_word("F2", 1)) == "1bA3"
    assert str(family_word("F3", 1)) == "1BAB1"
    assert str(family_word("F4", 0)) == "3b3"


def test_family_words_are_valid():
    for fam_id, fam in FAMILIES.items():
        if fam.fixed:
            cases = [(0, None)]
        elif fam.needs_m:
            cases = [(n, m) for n in range(4) for m in range(1, 4)]
        else:
            cases = [(n, None) for n in range(5)]
        for n, m in cases:
            w = family_word(fam_id, n, m)
            assert parse_word(str(w)) == w


def test_low_lying_families_match_engine():
    for fam_id in ("Z1", "Z2"):
        for n in range(4):
            for m in range(1, 5):
                assert (self_intersection(family_word(fam_id, n, m))
                        == family_intersections(fam_id, n, m))
    for fam_id in ("Z3", "Z4", "Z5"):
        for n in range(8):
            assert (self_intersection(family_word(fam_id, n))
                    == family_intersections(fam_id, n))
    assert self_intersection(family_word("C2")) == 2
    assert self_intersection(family_word("C7")) == 7


def test_quotients_are_low():
    for fam_id in ("Z1", "Z2"):
        for n in range(4):
            for m in range(1, 5):
                assert max(family_quotients(fam_id, n, m)) <= 2
    for fam_id in ("Z3", "Z4", "Z5", "C7"):
        qs = family_quotients(fam_id, 2) if fam_id != "C7" else family_quotients("C7")
        assert max(qs) <= 2
    assert family_quotients("C2") == (2, 1, 1)


def test_family_argument_errors():
    with pytest.raises(UnsupportedFamily):
        family_word("Q9", 1)
    with pytest.raises(ValueError):
        family_word("Z1", 2)  # needs m
    with pytest.raises(ValueError):
        family_word("Z4", 2, 1)  # no second parameter
    with pytest.raises(ValueError):
        family_word("Z4", -1)
    with pytest.raises(ValueError):
        family_word("C2", 1)
    with pytest.raises(UnsupportedFamily):
        family_quotients("F1", 1)


def test_continued_fraction_values():
    assert continued_fraction_value([2, 1, 1]) == Fraction(2, 5)
    assert continued_fraction_value([2]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        continued_fraction_value([])
    with pytest.raises(ValueError):
        continued_fraction_value([2, 0, 1])


def test_decompose_realizes_every_value():
    for target in range(500):
        family, n, m = decompose(target)
        assert family_intersections(family, n, m) == target
    with pytest.raises(ValueError):
        decompose(-1)


def test_decompose_specials():
    assert decompose(0) == ("Z4", 0, None)
    assert decompose(2) == ("C2", 0, None)
    assert decompose(7) == ("C7", 0, None)
    assert decompose(14).family == "Z3"


def test_witness_words_check_out():
    for target in (0, 1, 2, 7, 14, 23, 99, 280):
        wit = witness(target)
        assert parse_word(str(wit.word)) == wit.word
        assert self_intersection(wit.word) == target
        assert max(wit.quotients) <= 2


def test_value_sets_match_membership_predicate():
    for fam_id in ("Z1", "Z2", "Z3", "Z4", "Z5"):
        members = value_set_members(fam_id, 400)
        assert members == {v for v in range(401) if in_value_set(fam_id, v)}


def test_covering_family_is_consistent():
    for value in range(400):
        fam_id = covering_family(value)
        if fam_id in ("C2", "C7"):
            assert value in (2, 7)
        else:
            assert in_value_set(fam_id, value)


@given(st.integers(0, 100000))
def test_witness_hits_any_target(target):
    family, n, m = decompose(target)
    assert family_intersections(family, n, m) == target


def test_pattern_examples():
    ok = pattern_low_lying(parse_word("1BABA2"), 4)
    assert ok.is_low_lying and not ok.extrapolated

    run = pattern_low_lying(parse_word("3aaaab3"), 4)
    assert not run.is_low_lying and not run.extrapolated

    mixed = pattern_low_lying(parse_word("1bAbAbAbA3"), 4)
    assert not mixed.is_low_lying and mixed.extrapolated

    uniform = pattern_low_lying(parse_word("3abababab3"), 4)
    assert not uniform.is_low_lying and not uniform.extrapolated


def test_pattern_window_bound():
    with pytest.raises(ValueError):
        pattern_low_lying(parse_word("1BABA2"), 1)
    other_k = pattern_low_lying(parse_word("1BABA2"), 3)
    assert other_k.extrapolated


def test_pattern_is_truthy():
    assert pattern_low_lying(parse_word("1BABA2"))
    assert not pattern_low_lying(parse_word("3aaaab3"))


def test_reference_words_reproduce():
    rows = load_reference_words()
    assert len(rows) == 79
    for text, expected in rows:
        assert self_intersection(parse_word(text)) == expected


def test_reference_words_cover_every_low_value():
    rows = load_reference_words()
    assert len({text for text, _ in rows}) == len(rows)
    values = sorted(expected for _, expected in rows)
    assert values == sorted(set(values))  # one witness per listed value
