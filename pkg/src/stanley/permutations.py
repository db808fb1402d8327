"""
Permutations of {1, ..., n} in one-line notation.

A permutation is a plain tuple ``w`` with ``w[i-1] = w_i``; values and
positions are 1-based to match the usual combinatorial conventions.  The
ambient size n is ``len(w)`` and is part of a permutation's identity: the
same window embedded in a larger symmetric group (``embed_left`` /
``embed_right``) compares unequal to the original.

>>> length((2, 3, 1, 6, 5, 4))
5
>>> lehmer_code((3, 5, 4, 1, 2))
(2, 3, 2, 0, 0)
"""

from __future__ import annotations

from itertools import combinations, permutations as _permutations
from typing import Iterator, NamedTuple, Sequence

Perm = tuple[int, ...]


def is_permutation(window: Sequence[int]) -> bool:
    """
    Check that window is a rearrangement of 1..n.

    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 3), (1, 1, 2)]]
    [True, True, True, False, False]
    """
    return sorted(window) == list(range(1, len(window) + 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The order-reversing permutation n, n-1, ..., 1."""
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return _permutations(range(1, n + 1))


def length(w: Perm) -> int:
    """
    Number of inversions; equals the number of letters in any reduced word.

    >>> length((1, 2, 3, 4))
    0
    >>> length((2, 3, 1, 6, 5, 4))
    5
    """
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def lehmer_code(w: Perm) -> tuple[int, ...]:
    """
    The Lehmer code c(w): c_i = #{j > i with w_j < w_i}.

    >>> lehmer_code((3, 5, 4, 1, 2))
    (2, 3, 2, 0, 0)
    """
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
    )


def code_partition(w: Perm) -> tuple[int, ...]:
    """The shape λ(w): the Lehmer code sorted weakly decreasing, zeros dropped."""
    return tuple(sorted((c for c in lehmer_code(w) if c), reverse=True))


def perm_from_code(code: Sequence[int]) -> Perm:
    """
    Invert the Lehmer code: the unique w with lehmer_code(w) == code.

    >>> perm_from_code((3, 1, 1, 0, 0, 0))
    (4, 2, 3, 1, 5, 6)
    """
    available = list(range(1, len(code) + 1))
    window = []
    for c in code:
        if not 0 <= c < len(available):
            raise ValueError(f"invalid Lehmer code entry {c}")
        window.append(available.pop(c))
    return tuple(window)


def descents(w: Perm) -> list[int]:
    """Positions i with w_i > w_{i+1}, 1-based."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def contains_pattern(w: Perm, pattern: Perm) -> bool:
    """
    Whether some subsequence of w is order-isomorphic to pattern.

    Brute force over subsequences; permutations here are small.

    >>> contains_pattern((2, 4, 3, 1), (1, 3, 2))
    True
    >>> contains_pattern((3, 4, 2, 1), (1, 3, 2))
    False
    """
    k = len(pattern)
    rank = tuple(sorted(range(k), key=lambda i: pattern[i]))
    for positions in combinations(range(len(w)), k):
        values = [w[p] for p in positions]
        if sorted(range(k), key=lambda i: values[i]) == list(rank):
            return True
    return False


class PatternFlags(NamedTuple):
    dominant: bool
    vexillary: bool
    grassmannian: bool


def is_dominant(w: Perm) -> bool:
    """
    132-avoiding, equivalently: weakly decreasing Lehmer code.

    Both characterizations are computed and must agree.
    """
    by_code = all(a >= b for a, b in zip(lehmer_code(w), lehmer_code(w)[1:]))
    by_pattern = not contains_pattern(w, (1, 3, 2))
    assert by_code == by_pattern, w
    return by_code


def is_vexillary(w: Perm) -> bool:
    """2143-avoiding."""
    return not contains_pattern(w, (2, 1, 4, 3))


def is_grassmannian(w: Perm) -> bool:
    """At most one descent."""
    return len(descents(w)) <= 1


def classify(w: Perm) -> PatternFlags:
    return PatternFlags(is_dominant(w), is_vexillary(w), is_grassmannian(w))


def grassmannian_shape(w: Perm) -> tuple[int, ...]:
    """
    The partition of a Grassmannian permutation: with descent at d,
    λ_i = w_{d+1-i} - (d+1-i).

    >>> grassmannian_shape((3, 5, 1, 2, 4, 6))
    (3, 2)
    """
    ds = descents(w)
    if not ds:
        return ()
    if len(ds) > 1:
        raise ValueError(f"{w} is not Grassmannian")
    d = ds[0]
    return tuple(w[i - 1] - i for i in range(d, 0, -1) if w[i - 1] > i)


def apply_transposition(w: Perm, i: int, j: int) -> Perm:
    """
    w t_{i,j}: swap the entries at positions i < j.

    >>> apply_transposition((6, 4, 5, 9, 7, 8, 3, 2, 1), 4, 6)
    (6, 4, 5, 8, 7, 9, 3, 2, 1)
    """
    if not 1 <= i < j <= len(w):
        raise ValueError(f"positions out of range: i={i}, j={j}, n={len(w)}")
    window = list(w)
    window[i - 1], window[j - 1] = window[j - 1], window[i - 1]
    return tuple(window)


def multiply_simple(w: Perm, i: int) -> Perm:
    """w s_i: swap the entries at positions i, i+1."""
    return apply_transposition(w, i, i + 1)


def embed_left(w: Perm) -> Perm:
    """1 x w: prepend a fixed point, shifting all values up by one."""
    return (1,) + tuple(v + 1 for v in w)


def embed_right(w: Perm) -> Perm:
    """w x 1: append the new largest value as a fixed point."""
    return w + (len(w) + 1,)


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((2, 3, 1, 6, 5, 4))
    (3, 1, 2, 6, 5, 4)
    """
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def complement(w: Perm) -> Perm:
    """
    The reverse-complement v with v_i = n+1 - w_{n+1-i}; an involution
    preserving length (conjugation by the longest element).

    >>> complement((1, 2, 3))
    (1, 2, 3)
    >>> complement((2, 4, 1, 6, 3, 5))
    (2, 4, 1, 6, 3, 5)
    """
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def reduced_words(w: Perm) -> list[tuple[int, ...]]:
    """
    All reduced words of w, lexicographically sorted.

    Peels a descent at a time: a word for w ends in d iff d is a descent,
    and the rest is a word for w s_d.

    >>> reduced_words((3, 2, 1))
    [(1, 2, 1), (2, 1, 2)]
    >>> reduced_words((1, 2, 3))
    [()]
    """
    if not descents(w):
        return [()]
    words = []
    for d in descents(w):
        for prefix in reduced_words(multiply_simple(w, d)):
            words.append(prefix + (d,))
    return sorted(words)


def parse_permutation(text: str) -> Perm:
    """
    Accepts comma-separated one-line notation ("2,3,1,6,5,4") or, for n <= 9,
    the compact digit string ("231654").
    """
    text = text.strip()
    if "," in text:
        window = tuple(int(part) for part in text.split(","))
    elif text.isdigit():
        window = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse permutation: {text!r}")
    if not is_permutation(window):
        raise ValueError(f"not a permutation of 1..{len(window)}: {text!r}")
    return window


def format_permutation(w: Perm) -> str:
    """Compact digits for n <= 9, comma-separated otherwise."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
