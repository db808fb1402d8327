"""
Exact sparse polynomials in two alphabets, and the symmetric-function side
of reduced word combinatorics: Stanley symmetric functions (truncated to
finitely many variables), Schubert and double Schubert polynomials, Schur
polynomials, and the expansion machinery connecting them.

All coefficients are exact integers.  A term maps a pair of exponent
vectors (one for x, one for y, trailing zeros dropped) to its coefficient.

>>> print(schubert_bjs((3, 2, 1)))
x1^2*x2
>>> print(double_schubert((2, 1, 3)))
x1 - y1
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

from .permutations import (
    Perm,
    code_partition,
    identity as identity_perm,
    length,
    longest_element,
    multiply_simple,
    reduced_words,
)

Exponents = tuple[int, ...]
TermKey = tuple[Exponents, Exponents]


def _trim(exps: Exponents) -> Exponents:
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


def _merge(a: Exponents, b: Exponents) -> Exponents:
    if len(a) < len(b):
        a, b = b, a
    return tuple(
        x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)
    )


class SparsePoly:
    """
    Immutable-by-convention sparse polynomial in x_1, x_2, ... and
    y_1, y_2, ...  Zero coefficients are never stored.

    >>> x1, x2 = SparsePoly.x(1), SparsePoly.x(2)
    >>> print((x1 + x2) * (x1 - x2))
    x1^2 - x2^2
    >>> (x1 - x2) * SparsePoly.zero() == SparsePoly.zero()
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TermKey, int] = ()):
        self.terms: dict[TermKey, int] = {
            (_trim(xe), _trim(ye)): c
            for (xe, ye), c in dict(terms).items()
            if c != 0
        }

    @staticmethod
    def zero() -> SparsePoly:
        return SparsePoly()

    @staticmethod
    def constant(c: int) -> SparsePoly:
        return SparsePoly({((), ()): c})

    @staticmethod
    def x(i: int, power: int = 1) -> SparsePoly:
        return SparsePoly({((0,) * (i - 1) + (power,), ()): 1})

    @staticmethod
    def y(i: int, power: int = 1) -> SparsePoly:
        return SparsePoly({((), (0,) * (i - 1) + (power,)): 1})

    @staticmethod
    def monomial(xexp: Exponents, yexp: Exponents = (), coeff: int = 1) -> SparsePoly:
        return SparsePoly({(tuple(xexp), tuple(yexp)): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: SparsePoly) -> SparsePoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return SparsePoly(out)

    def __neg__(self) -> SparsePoly:
        return SparsePoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other: SparsePoly | int) -> SparsePoly:
        if isinstance(other, int):
            return SparsePoly({k: c * other for k, c in self.terms.items()})
        out: dict[TermKey, int] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (_merge(xa, xb), _merge(ya, yb))
                out[key] = out.get(key, 0) + ca * cb
        return SparsePoly(out)

    __rmul__ = __mul__

    def coefficient(self, xexp: Exponents, yexp: Exponents = ()) -> int:
        return self.terms.get((_trim(tuple(xexp)), _trim(tuple(yexp))), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(xe) + sum(ye) for xe, ye in self.terms)

    def has_y(self) -> bool:
        return any(ye for _, ye in self.terms)

    def substitute_y_zero(self) -> SparsePoly:
        return SparsePoly(
            {(xe, ()): c for (xe, ye), c in self.terms.items() if not ye}
        )

    def swap_x(self, i: int) -> SparsePoly:
        """Exchange x_i and x_{i+1} in every term."""
        out: dict[TermKey, int] = {}
        for (xe, ye), c in self.terms.items():
            exps = list(xe) + [0] * max(0, i + 1 - len(xe))
            exps[i - 1], exps[i] = exps[i], exps[i - 1]
            key = (_trim(tuple(exps)), ye)
            out[key] = out.get(key, 0) + c
        return SparsePoly(out)

    def is_symmetric_x(self, m: int) -> bool:
        return all(self.swap_x(i) == self for i in range(1, m))

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        """Total degree descending, then exponent vectors descending."""
        width = max(
            (max(len(xe), len(ye)) for xe, ye in self.terms), default=0
        )

        def pad(e: Exponents) -> Exponents:
            return e + (0,) * (width - len(e))

        return sorted(
            self.terms.items(),
            key=lambda item: (
                -(sum(item[0][0]) + sum(item[0][1])),
                tuple(-e for e in pad(item[0][0])),
                tuple(-e for e in pad(item[0][1])),
            ),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (xe, ye), c in self.sorted_terms():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(xe, start=1)
                if e
            ] + [
                f"y{i}" if e == 1 else f"y{i}^{e}"
                for i, e in enumerate(ye, start=1)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            mag = abs(c)
            if mag != 1 or not factors:
                body = f"{mag}*{body}" if factors else str(mag)
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


def _weight_chains(
    l: int, ascent_flags: tuple[bool, ...], m: int
) -> Iterator[Exponents]:
    """
    All x-exponent vectors from sequences 1 <= b_1 <= ... <= b_l <= m with
    b_i < b_{i+1} forced where ascent_flags[i] is set.
    """
    expo = [0] * m

    def rec(i: int, prev: int) -> Iterator[Exponents]:
        if i == l:
            yield tuple(expo)
            return
        lo = prev + 1 if i > 0 and ascent_flags[i - 1] else prev
        for b in range(max(lo, 1), m + 1):
            expo[b - 1] += 1
            yield from rec(i + 1, b)
            expo[b - 1] -= 1

    yield from rec(0, 1)


def stanley_truncated(w: Perm, m: int | None = None) -> SparsePoly:
    """
    The Stanley symmetric function of w restricted to x_1..x_m: the sum of
    x_{b_1}...x_{b_l} over reduced words a of w and weakly increasing b
    rising strictly wherever a does.  m defaults to max(length(w), 1), the
    smallest window whose Schur expansion is faithful.

    >>> print(stanley_truncated((2, 1), 3))
    x1 + x2 + x3
    """
    if m is None:
        m = max(length(w), 1)
    if m < 1:
        raise ValueError(f"need at least one variable, got m={m}")
    # The inner sum only depends on the ascent pattern of the word, so
    # enumerate b-chains once per pattern.
    l = length(w)
    patterns: dict[tuple[bool, ...], int] = {}
    for a in reduced_words(w):
        flags = tuple(a[i] < a[i + 1] for i in range(len(a) - 1))
        patterns[flags] = patterns.get(flags, 0) + 1
    out: dict[TermKey, int] = {}
    for flags, count in patterns.items():
        for expo in _weight_chains(l, flags, m):
            key = (_trim(expo), ())
            out[key] = out.get(key, 0) + count
    return SparsePoly(out)


def schubert_bjs(w: Perm) -> SparsePoly:
    """
    The Schubert polynomial as the Billey-Jockusch-Stanley sum: compatible
    sequences additionally bounded by b_i <= a_i.

    >>> print(schubert_bjs((1, 3, 2)))
    x1 + x2
    """
    out: dict[TermKey, int] = {}
    for a in reduced_words(w):
        l = len(a)
        expo = [0] * (len(w) or 1)

        def rec(i: int, prev: int) -> None:
            if i == l:
                key = (_trim(tuple(expo)), ())
                out[key] = out.get(key, 0) + 1
                return
            lo = prev + 1 if i > 0 and a[i - 1] < a[i] else prev
            for b in range(max(lo, 1), a[i] + 1):
                expo[b - 1] += 1
                rec(i + 1, b)
                expo[b - 1] -= 1

        rec(0, 1)
    return SparsePoly(out)


def divided_difference(f: SparsePoly, i: int) -> SparsePoly:
    """
    The divided difference (f - s_i f) / (x_i - x_{i+1}), computed exactly
    term by term; the defining identity is asserted on the result.

    >>> print(divided_difference(SparsePoly.x(1, 2), 1))
    x1 + x2
    >>> divided_difference(SparsePoly.x(1) * SparsePoly.x(2), 1)
    SparsePoly(0)
    """
    if i < 1:
        raise ValueError(f"variable index must be positive: {i}")
    acc: dict[TermKey, int] = {}
    for (xe, ye), c in f.terms.items():
        exps = list(xe) + [0] * max(0, i + 1 - len(xe))
        a, b = exps[i - 1], exps[i]
        if a == b:
            continue
        # (x^a y^b - x^b y^a)/(x - y) = sign * sum of x^t y^(a+b-1-t)
        lo, hi = min(a, b), max(a, b)
        sign = 1 if a > b else -1
        for t in range(lo, hi):
            exps[i - 1], exps[i] = t, a + b - 1 - t
            key = (_trim(tuple(exps)), ye)
            acc[key] = acc.get(key, 0) + sign * c
    out = SparsePoly(acc)
    assert out * (SparsePoly.x(i) - SparsePoly.x(i + 1)) == f - f.swap_x(i), (
        "inexact divided difference; corrupted input polynomial"
    )
    return out


def double_schubert(w: Perm) -> SparsePoly:
    """
    The double Schubert polynomial, by divided differences applied to the
    closed product for the longest element, descending along the first
    ascent at each step.
    """
    n = len(w)
    if w == identity_perm(n):
        return SparsePoly.constant(1)
    chain = []
    v = w
    w0 = longest_element(n)
    while v != w0:
        i = next(i for i in range(1, n) if v[i - 1] < v[i])
        chain.append(i)
        v = multiply_simple(v, i)
    f = SparsePoly.constant(1)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            f = f * (SparsePoly.x(i) - SparsePoly.y(j))
    for i in reversed(chain):
        f = divided_difference(f, i)
    return f


@lru_cache(maxsize=None)
def schur_poly(lam: tuple[int, ...], m: int) -> SparsePoly:
    """
    The Schur polynomial s_lam(x_1..x_m) by semistandard tableau
    enumeration; zero when lam has more than m rows.

    >>> print(schur_poly((2, 1), 2))
    x1^2*x2 + x1*x2^2
    """
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 1 for p in lam):
        raise ValueError(f"not a partition: {lam}")
    if len(lam) > m:
        return SparsePoly.zero()
    if not lam:
        return SparsePoly.constant(1)
    out: dict[TermKey, int] = {}
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    filling: dict[tuple[int, int], int] = {}
    expo = [0] * m

    def rec(idx: int) -> None:
        if idx == len(cells):
            key = (_trim(tuple(expo)), ())
            out[key] = out.get(key, 0) + 1
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = filling[(i, j - 1)]
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, m + 1):
            filling[(i, j)] = v
            expo[v - 1] += 1
            rec(idx + 1)
            expo[v - 1] -= 1
        filling.pop((i, j), None)

    rec(0)
    return SparsePoly(out)


def schur_expand(f: SparsePoly, m: int) -> dict[tuple[int, ...], int]:
    """
    Expand a symmetric polynomial in x_1..x_m as integers on Schur
    polynomials, peeling the lexicographically leading monomial.  The
    reconstruction is asserted before returning.

    Raises ValueError when f is not symmetric in x_1..x_m, mixes in y
    variables, or peels to a negative coefficient (not Schur-positive, or
    m too small for the degree).
    """
    if f.has_y():
        raise ValueError("cannot Schur-expand a polynomial with y variables")
    if not f.is_symmetric_x(m):
        raise ValueError(f"not symmetric in x1..x{m}")
    coeffs: dict[tuple[int, ...], int] = {}
    rest = f
    while rest:
        lead = max(
            (xe + (0,) * (m - len(xe)) for xe, _ in rest.terms), default=None
        )
        lam = _trim(lead)
        assert all(a >= b for a, b in zip(lam, lam[1:])), (
            f"leading exponent {lam} of a symmetric polynomial "
            "must be a partition"
        )
        c = rest.coefficient(lam)
        if c < 0:
            raise ValueError(
                f"negative leftover {c} at {lam}: input is not "
                "Schur-positive or the variable window is too small"
            )
        coeffs[lam] = c
        rest = rest - c * schur_poly(lam, m)
    total = SparsePoly.zero()
    for lam, c in coeffs.items():
        total += c * schur_poly(lam, m)
    assert total == f, "Schur reconstruction failed"
    return coeffs


def eg_coeffs(w: Perm, method: str = "tableaux") -> dict[tuple[int, ...], int]:
    """
    The Schur expansion coefficients of the Stanley symmetric function of
    w, keyed by partition, by one of four independent routes:

    - "tableaux":   shapes of the reduced word tableaux of w
    - "pipedreams": shapes of the EG-pipedreams of w
    - "mls_leaves": Lehmer codes of the modified transition tree leaves
    - "monomial":   Schur expansion of the truncated Stanley polynomial

    >>> eg_coeffs((2, 1, 3)) == {(1,): 1}
    True
    """
    if method == "tableaux":
        from .tableaux import enumerate_reduced_word_tableaux, shape

        counts: dict[tuple[int, ...], int] = {}
        for t in enumerate_reduced_word_tableaux(w):
            counts[shape(t)] = counts.get(shape(t), 0) + 1
        return counts
    if method == "pipedreams":
        from .pipedreams import enumerate_all, is_eg

        counts = {}
        for p in enumerate_all(w):
            lam = is_eg(p)
            if lam is not None:
                counts[lam] = counts.get(lam, 0) + 1
        return counts
    if method == "mls_leaves":
        from .trees import mls_tree

        counts = {}
        for node in mls_tree(w).nodes:
            if node.leaf:
                lam = code_partition(node.perm)
                counts[lam] = counts.get(lam, 0) + 1
        return counts
    if method == "monomial":
        m = max(length(w), 1)
        return {
            lam: c
            for lam, c in schur_expand(stanley_truncated(w, m), m).items()
            if c
        }
    raise ValueError(
        f"unknown method {method!r}: expected tableaux, pipedreams, "
        "mls_leaves, or monomial"
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
