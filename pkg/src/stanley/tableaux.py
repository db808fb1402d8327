"""
Increasing tableaux and Coxeter-Knuth (Edelman-Greene) insertion.

A tableau is a tuple of rows, each row a tuple of positive integers, with
weakly decreasing row lengths.  "Increasing" means rows and columns are both
strictly increasing.

>>> eg_insert((2, 1, 2))
(((1, 2), (2,)), ((1, 3), (2,)))
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable

from .permutations import (
    Perm,
    code_partition,
    inverse,
    is_dominant,
    reduced_words,
)
from .words import Word, evaluate, is_reduced

Tableau = tuple[tuple[int, ...], ...]


def shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_partition_shape(t: Tableau) -> bool:
    lengths = shape(t)
    return all(a >= b for a, b in zip(lengths, lengths[1:])) and (
        not lengths or lengths[-1] > 0
    )


def is_increasing(t: Tableau) -> bool:
    """Strictly increasing along every row and down every column."""
    if not is_partition_shape(t):
        return False
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def transpose(t: Tableau) -> Tableau:
    if not t:
        return ()
    return tuple(
        tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0]))
    )


def row_reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows read left to right, from the bottom row up.

    >>> row_reading_word(((1, 4, 5), (2,), (5,)))
    (5, 2, 1, 4, 5)
    """
    out: list[int] = []
    for row in reversed(t):
        out.extend(row)
    return tuple(out)


def column_reading_word(t: Tableau) -> tuple[int, ...]:
    """Columns read top to bottom, from the rightmost column leftwards.

    >>> column_reading_word(((1, 4, 5), (2,), (5,)))
    (5, 4, 1, 2, 5)
    """
    out: list[int] = []
    for col in reversed(transpose(t)):
        out.extend(col)
    return tuple(out)


def eg_insert(letters: Iterable[int]) -> tuple[Tableau, Tableau]:
    """
    Insert a word letter by letter, returning the insertion tableau P and
    the standard recording tableau Q.

    Row insertion of x: append if x exceeds the last entry; otherwise bump
    the leftmost entry y > x, replacing it by x only when that keeps the row
    strictly increasing (when x already sits just left of y the row is kept
    as is).

    >>> eg_insert((2, 3, 1, 6, 4, 3, 2))[0]
    ((1, 2, 4), (2, 3), (4,), (6,))
    >>> eg_insert((2, 3, 1, 6, 4, 3, 2))[1]
    ((1, 2, 4), (3, 5), (6,), (7,))
    """
    rows: list[list[int]] = []
    recording: list[list[int]] = []
    for time, x in enumerate(letters, start=1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                recording.append([time])
                break
            row = rows[r]
            if x > row[-1]:
                row.append(x)
                recording[r].append(time)
                break
            j = bisect_right(row, x)
            # j < len(row) since x <= row[-1] and x equal to the row maximum
            # cannot happen while inserting a reduced word.
            assert j < len(row), f"letter {x} equals the maximum of row {row}"
            y = row[j]
            if j == 0 or row[j - 1] < x:
                row[j] = x
            x = y
            r += 1
    return (
        tuple(tuple(row) for row in rows),
        tuple(tuple(row) for row in recording),
    )


def insertion_tableau(letters: Iterable[int]) -> Tableau:
    return eg_insert(letters)[0]


def is_standard(q: Tableau) -> bool:
    """Entries 1..size, strictly increasing along rows and down columns."""
    return is_increasing(q) and sorted(
        x for row in q for x in row
    ) == list(range(1, size(q) + 1))


def is_reduced_word_tableau(t: Tableau, w: Perm) -> bool:
    """
    Does t represent w?  Equivalent tests: the column reading word is a
    reduced word for w, or the row reading word is a reduced word for the
    inverse of w.  Both are evaluated and checked against each other.
    """
    if not is_increasing(t):
        return False
    n = len(w)
    entries = [x for row in t for x in row]
    if any(not 1 <= x < n for x in entries):
        return False
    col = Word(column_reading_word(t), n)
    row = Word(row_reading_word(t), n)
    by_column = is_reduced(col) and evaluate(col) == w
    by_row = is_reduced(row) and evaluate(row) == inverse(w)
    assert by_column == by_row, (t, w)
    return by_column


def enumerate_reduced_word_tableaux(w: Perm) -> list[Tableau]:
    """
    All increasing tableaux whose column reading word is a reduced word of
    w, built by inserting every reduced word of the inverse permutation.
    Sorted by shape, then by row reading word.
    """
    seen = {insertion_tableau(b) for b in reduced_words(inverse(w))}
    return sorted(seen, key=lambda t: (shape(t), row_reading_word(t)))


def frozen_tableau(w: Perm) -> Tableau:
    """
    The unique reduced word tableau of a dominant permutation: cell (i, j)
    holds i + j - 1 on the shape cut out by the Lehmer code.

    >>> frozen_tableau((4, 2, 3, 1, 5, 6))
    ((1, 2, 3), (2,), (3,))
    """
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    lam = code_partition(w)
    return tuple(
        tuple(i + j - 1 for j in range(1, part + 1))
        for i, part in enumerate(lam, start=1)
    )


def parse_tableau(text: str) -> Tableau:
    """Rows separated by "/", entries by ",": "1,4,5/2/5"."""
    text = text.strip()
    if not text:
        return ()
    t = tuple(
        tuple(int(x) for x in row.split(",")) for row in text.split("/")
    )
    if not is_partition_shape(t) or any(x < 1 for row in t for x in row):
        raise ValueError(f"not a tableau: {text!r}")
    return t


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join(str(x) for x in row) for row in t)


def render_tableau(t: Tableau) -> str:
    """One row per line, entries space-separated and column-aligned."""
    if not t:
        return "(empty tableau)"
    width = max(len(str(x)) for row in t for x in row)
    return "\n".join(
        " ".join(str(x).rjust(width) for x in row) for row in t
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
