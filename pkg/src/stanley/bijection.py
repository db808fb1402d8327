"""
The shape-preserving correspondence between reduced word tableaux and
EG-pipedreams.

Forward, the column reading word of the tableau steers a walk down the
pipedream-decorated transition tree: at each node the Little map for the
node's expansion box turns the current word into a reduced word of exactly
one child.  Backward, the walk is undone from the pipedream alone: reverse
droops consume the NW elbows smallest-first, and inverting the Little maps
in the same order carries the frozen tableau's column word back up to a
reduced word of the original permutation.

Two facts are asserted at every step of either word chain: the recording
tableau of the reversed word never changes, and the insertion tableau of
the reversed word has the current word as its column reading word.
"""

from __future__ import annotations

from .permutations import Perm, code_partition, format_permutation, perm_from_code
from .pipedreams import BumplessPipedream, is_eg, reverse_droop, rothe, validate
from .tableaux import (
    Tableau,
    column_reading_word,
    eg_insert,
    format_tableau,
    frozen_tableau,
    insertion_tableau,
    is_reduced_word_tableau,
    shape,
)
from .trees import eg_tree
from .words import Word, evaluate, little_map, little_map_inverse, reverse


def _check_chain_step(tau: Word, recording: Tableau) -> None:
    p, q = eg_insert(reverse(tau).letters)
    assert q == recording, "recording tableau drifted along the word chain"
    assert column_reading_word(p) == tau.letters, "column word not recovered"


def gamma(t: Tableau, w: Perm) -> BumplessPipedream:
    """
    Map a reduced word tableau for w to an EG-pipedream of w of the same
    shape.

    >>> gamma(((1, 4, 5), (2,), (5,)), (2, 3, 1, 6, 5, 4)).rows[3]
    'r+jrjr'
    """
    if not is_reduced_word_tableau(t, w):
        raise ValueError(
            f"{format_tableau(t)} is not a reduced word tableau for "
            f"{format_permutation(w)}"
        )
    tree = eg_tree(w)
    node = tree.root
    tau = Word(column_reading_word(t), len(w))
    _, recording = eg_insert(reverse(tau).letters)
    while not node.leaf:
        u = node.perm
        p, q, _ = tree.nodes[node.children[0]].move
        tau = little_map(tau, p, u[q - 1])
        assert tau.n == len(w), "the bump chain never leaves the ambient size"
        _check_chain_step(tau, recording)
        target = evaluate(tau)
        matches = [c for c in node.children if tree.nodes[c].perm == target]
        assert len(matches) == 1, (u, target)
        node = tree.nodes[matches[0]]
    assert tau.letters == column_reading_word(frozen_tableau(node.perm))
    result = node.pipedream
    assert is_eg(result) == shape(t), "shape drifted across the walk"
    return result


def word_of_pipedream(p: BumplessPipedream) -> Word:
    """
    The reduced word an EG-pipedream stands for: reverse droops consume the
    NW elbows smallest-first down to the Rothe pipedream, and the inverse
    Little maps for the consumed boxes carry the frozen column word of the
    dominant leaf back to a reduced word of the traced permutation.

    >>> word_of_pipedream(rothe((2, 1, 3))).letters
    (1,)
    """
    w = validate(p)
    lam = is_eg(p)
    if lam is None:
        raise ValueError(
            "not an EG-pipedream: empty boxes do not form a top-left partition"
        )
    boxes = []
    current = p
    while True:
        elbows = current.nw_elbows()
        if not elbows:
            break
        boxes.append(elbows[0])
        current = reverse_droop(current, elbows[0])
    assert current == rothe(w), "reverse droops did not land on the Rothe pipedream"
    assert boxes == sorted(boxes), "NW elbows were not consumed in increasing order"

    leaf = perm_from_code(lam + (0,) * (p.n - len(lam)))
    assert code_partition(leaf) == lam
    tau = Word(column_reading_word(frozen_tableau(leaf)), p.n)
    _, recording = eg_insert(reverse(tau).letters)
    for i, j in boxes:
        tau = little_map_inverse(tau, i, j)
        _check_chain_step(tau, recording)
    assert evaluate(tau) == w, "inverse chain missed the traced permutation"
    return tau


def gamma_inverse(p: BumplessPipedream) -> Tableau:
    """
    Map an EG-pipedream back to the reduced word tableau of the same shape:
    the insertion tableau of the pipedream's word, read in reverse.

    >>> gamma_inverse(rothe((3, 1, 2)))
    ((1, 2),)
    """
    tau = word_of_pipedream(p)
    out = insertion_tableau(reverse(tau).letters)
    assert shape(out) == is_eg(p), "shape drifted across the walk"
    assert is_reduced_word_tableau(out, evaluate(tau))
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
