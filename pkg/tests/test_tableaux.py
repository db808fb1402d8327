from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from stanley.permutations import inverse, longest_element, reduced_words
from stanley.tableaux import (
    column_reading_word,
    eg_insert,
    enumerate_reduced_word_tableaux,
    format_tableau,
    frozen_tableau,
    insertion_tableau,
    is_increasing,
    is_reduced_word_tableau,
    is_standard,
    parse_tableau,
    render_tableau,
    row_reading_word,
    shape,
    transpose,
)


@st.composite
def reduced(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    w = tuple(draw(st.permutations(range(1, n + 1))))
    words = reduced_words(w)
    return words[draw(st.integers(0, len(words) - 1))]


def hook_length_count(lam):
    # Standard tableaux of a partition shape, by the hook length formula.
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    product = 1
    for i, j in cells:
        arm = lam[i] - j - 1
        leg = sum(1 for k in range(i + 1, len(lam)) if lam[k] > j)
        product *= arm + leg + 1
    return factorial(len(cells)) // product


def test_eg_insert_seven_letter_word():
    p, q = eg_insert((2, 3, 1, 6, 4, 3, 2))
    assert p == ((1, 2, 4), (2, 3), (4,), (6,))
    assert q == ((1, 2, 4), (3, 5), (6,), (7,))


def test_eg_insert_prefixes():
    assert insertion_tableau((2, 3, 1)) == ((1, 3), (2,))
    assert insertion_tableau((2, 3, 1, 6, 4)) == ((1, 3, 4), (2, 6))
    assert insertion_tableau((2, 3, 1, 6, 4, 3)) == ((1, 3, 4), (2, 4), (6,))


def test_eg_insert_repeated_letter_keeps_row():
    assert eg_insert((2, 1, 2)) == (((1, 2), (2,)), ((1, 3), (2,)))


def test_eg_insert_empty_word():
    assert eg_insert(()) == ((), ())


def test_reading_words():
    t = ((1, 4, 5), (2,), (5,))
    assert row_reading_word(t) == (5, 2, 1, 4, 5)
    assert column_reading_word(t) == (5, 4, 1, 2, 5)
    assert row_reading_word(()) == ()
    assert column_reading_word(()) == ()


def test_row_word_of_insertion_stays_reduced_for_same_permutation():
    p = insertion_tableau((2, 3, 1, 6, 4, 3, 2))
    assert row_reading_word(p) == (6, 4, 2, 3, 1, 2, 4)


@settings(deadline=None)
@given(reduced())
def test_insert_and_reinsert_row_word(a):
    # The row reading word of P(a) inserts back to P(a).
    p = insertion_tableau(a)
    assert is_increasing(p)
    assert insertion_tableau(row_reading_word(p)) == p


@settings(deadline=None)
@given(reduced())
def test_reversal_transposes(a):
    assert insertion_tableau(a[::-1]) == transpose(insertion_tableau(a))


@settings(deadline=None)
@given(reduced())
def test_recording_tableau_is_standard(a):
    p, q = eg_insert(a)
    assert is_standard(q)
    assert shape(p) == shape(q)


@pytest.mark.parametrize("w", [(4, 3, 2, 1), (2, 3, 1, 6, 5, 4), (2, 4, 3, 1)])
def test_insertion_is_injective(w):
    words = reduced_words(w)
    assert len({eg_insert(a) for a in words}) == len(words)


def test_reduced_word_count_splits_by_shape():
    # |Red(w)| is the number of (P, Q) pairs: standard tableaux counted
    # per insertion-tableau shape.
    w = (2, 3, 1, 6, 5, 4)
    tableaux = enumerate_reduced_word_tableaux(w)
    assert len(reduced_words(w)) == sum(
        hook_length_count(shape(t)) for t in tableaux
    )


def test_reduced_word_tableaux_of_w0():
    tableaux = enumerate_reduced_word_tableaux(longest_element(4))
    assert tableaux == [((1, 2, 3), (2, 3), (3,))]


def test_reduced_word_tableaux_shapes():
    tableaux = enumerate_reduced_word_tableaux((2, 3, 1, 6, 5, 4))
    assert [shape(t) for t in tableaux] == [
        (2, 1, 1, 1),
        (2, 2, 1),
        (3, 1, 1),
        (3, 2),
    ]
    # 321654 factors as a direct sum of two copies of 321, so the shape
    # multiset is the Littlewood-Richardson square of (2,1).
    tableaux = enumerate_reduced_word_tableaux((3, 2, 1, 6, 5, 4))
    assert sorted(shape(t) for t in tableaux) == [
        (2, 2, 1, 1),
        (2, 2, 2),
        (3, 1, 1, 1),
        (3, 2, 1),
        (3, 2, 1),
        (3, 3),
        (4, 1, 1),
        (4, 2),
    ]


def test_is_reduced_word_tableau():
    t = ((1, 4, 5), (2,), (5,))
    assert is_reduced_word_tableau(t, (2, 3, 1, 6, 5, 4))
    assert not is_reduced_word_tableau(t, (3, 1, 2, 6, 5, 4))
    assert not is_reduced_word_tableau(t, (2, 3, 1, 6, 4, 5))
    assert not is_reduced_word_tableau(((1, 1),), (2, 1, 3))
    assert not is_reduced_word_tableau(((5,),), (2, 1, 3))


@settings(deadline=None)
@given(reduced())
def test_membership_matches_enumeration(a):
    from stanley.words import evaluate, word

    w = evaluate(word(a))
    p = insertion_tableau(a[::-1])
    assert is_reduced_word_tableau(p, w)
    assert p in enumerate_reduced_word_tableaux(w)


def test_frozen_tableau():
    assert frozen_tableau((4, 2, 3, 1, 5, 6)) == ((1, 2, 3), (2,), (3,))
    assert frozen_tableau((3, 4, 2, 1)) == ((1, 2), (2, 3), (3,))
    assert frozen_tableau((1, 2, 3)) == ()
    with pytest.raises(ValueError, match="not dominant"):
        frozen_tableau((1, 3, 2, 4))


def test_frozen_tableau_is_the_unique_one():
    w = (3, 4, 2, 1)
    assert enumerate_reduced_word_tableaux(w) == [frozen_tableau(w)]


def test_parse_format_round_trip():
    t = ((1, 4, 5), (2,), (5,))
    assert parse_tableau("1,4,5/2/5") == t
    assert parse_tableau(format_tableau(t)) == t
    assert parse_tableau("") == ()
    with pytest.raises(ValueError, match="not a tableau"):
        parse_tableau("1/2,3")


def test_render_tableau():
    assert render_tableau(((1, 4, 5), (2,), (5,))) == "1 4 5\n2\n5"
    assert render_tableau(()) == "(empty tableau)"
