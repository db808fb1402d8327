import random

import pytest

from stanley.bijection import gamma, gamma_inverse, word_of_pipedream
from stanley.permutations import all_permutations, identity
from stanley.pipedreams import enumerate_all, is_eg, parse, rothe
from stanley.tableaux import (
    enumerate_reduced_word_tableaux,
    frozen_tableau,
    shape,
)

W231654 = (2, 3, 1, 6, 5, 4)
W321654 = (3, 2, 1, 6, 5, 4)

WORKED_TABLEAU = ((1, 4, 5), (2,), (5,))
WORKED_PIPEDREAM = parse("...r--\n.r-jr-\n.|r-+-\nr+jrjr\n||rjr+\n|||r++")


def test_worked_pair_forward():
    p = gamma(WORKED_TABLEAU, W231654)
    assert p == WORKED_PIPEDREAM
    assert is_eg(p) == (3, 1, 1)
    assert p.nw_elbows() == [(2, 4), (4, 3), (4, 5), (5, 4)]


def test_worked_pair_backward():
    assert gamma_inverse(WORKED_PIPEDREAM) == WORKED_TABLEAU


def test_worked_pair_word():
    assert word_of_pipedream(WORKED_PIPEDREAM).letters == (5, 4, 1, 2, 5)


def test_dominant_is_frozen_to_rothe():
    for w in [(3, 4, 2, 1), (4, 2, 3, 1), (2, 1, 3), identity(3)]:
        assert gamma(frozen_tableau(w), w) == rothe(w)
        assert gamma_inverse(rothe(w)) == frozen_tableau(w)


def test_gamma_rejects_foreign_tableau():
    with pytest.raises(ValueError):
        gamma(WORKED_TABLEAU, (3, 2, 1, 6, 5, 4))
    with pytest.raises(ValueError):
        gamma(((1, 2), (3,)), (2, 3, 1, 6, 5, 4))


def test_gamma_inverse_rejects_non_eg():
    stray = next(p for p in enumerate_all(W231654) if is_eg(p) is None)
    with pytest.raises(ValueError):
        gamma_inverse(stray)


def _roundtrip(w):
    tabs = enumerate_reduced_word_tableaux(w)
    egs = {p for p in enumerate_all(w) if is_eg(p) is not None}
    image = {}
    for t in tabs:
        p = gamma(t, w)
        assert is_eg(p) == shape(t), (w, t)
        assert p not in image, (w, t)
        image[p] = t
        assert gamma_inverse(p) == t, (w, t)
    assert set(image) == egs, w
    for p in egs:
        assert gamma(gamma_inverse(p), w) == p, w


def test_roundtrip_s4():
    for w in all_permutations(4):
        _roundtrip(w)


def test_roundtrip_s5_sample():
    rng = random.Random(23)
    for w in rng.sample(list(all_permutations(5)), 10):
        _roundtrip(w)


def test_roundtrip_231654():
    _roundtrip(W231654)


def test_roundtrip_321654():
    # Eight tableaux onto eight pipedreams, shapes matched pairwise.
    tabs = enumerate_reduced_word_tableaux(W321654)
    egs = {p for p in enumerate_all(W321654) if is_eg(p) is not None}
    assert len(tabs) == len(egs) == 8
    _roundtrip(W321654)
