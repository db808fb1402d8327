"""
Transition trees for Stanley symmetric functions.

Three variants share one node type: the classical tree recurses through
maximal transitions until every leaf is Grassmannian, the modified tree
expands the largest pivoted box of the Rothe pipedream until every leaf
is dominant, and the pipedream tree decorates the modified tree with the
droops realizing each transition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .permutations import (
    Perm,
    apply_transposition,
    descents,
    embed_left,
    embed_right,
    format_permutation,
    is_dominant,
    is_grassmannian,
    length,
)
from .pipedreams import BumplessPipedream, droop, is_eg, max_pivot_box, rothe, rothe_diagram


@dataclass
class TreeNode:
    id: int
    parent: int | None
    perm: Perm
    n: int
    move: tuple[int, int, int] | None
    pipedream: BumplessPipedream | None = None
    children: list[int] = field(default_factory=list)

    @property
    def leaf(self) -> bool:
        return not self.children


@dataclass
class TransitionTree:
    kind: str
    nodes: list[TreeNode]

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def leaves(self) -> list[TreeNode]:
        return [node for node in self.nodes if node.leaf]


def maximal_transition(w: Perm) -> tuple[int, int, frozenset[int], frozenset[Perm]]:
    """
    The transition at the last descent r of w: s marks the last position
    with w_s < w_r, and the returned permutations all have length l(w)
    and sum to the same Stanley symmetric function as w.

    The pivot set I is reported for w itself; when it is empty, the
    permutations come from the transition of the embedded permutation
    1 x w instead and live in a larger symmetric group.
    """
    des = descents(w)
    if not des:
        raise ValueError("the identity has no transition")
    r = des[-1]
    s = max(j for j in range(r + 1, len(w) + 1) if w[j - 1] < w[r - 1])
    v = apply_transposition(w, r, s)
    assert length(v) == length(w) - 1, (w, r, s)
    pivots = _up_pivots(v, r)
    if pivots:
        children = frozenset(apply_transposition(v, i, r) for i in pivots)
        return r, s, frozenset(pivots), children
    _, _, _, children = maximal_transition(embed_left(w))
    return r, s, frozenset(), children


def _up_pivots(u: Perm, k: int) -> list[int]:
    return [
        i
        for i in range(1, k)
        if length(apply_transposition(u, i, k)) == length(u) + 1
    ]


def _up_slots(u: Perm, k: int) -> list[int]:
    return [
        j
        for j in range(k + 1, len(u) + 1)
        if length(apply_transposition(u, k, j)) == length(u) + 1
    ]


def transition_sets(
    u: Perm, k: int
) -> tuple[frozenset[int], frozenset[int], frozenset[Perm], frozenset[Perm]]:
    """
    The index sets I and S of positions that lengthen u by a transposition
    through k, and the corresponding permutation sets.  An empty set falls
    back to the embedding that recovers it: 1 x u shifted for the earlier
    positions, u x 1 for the later ones; a single embedding always works.
    """
    if not 1 <= k <= len(u):
        raise ValueError(f"position k={k} out of range for n={len(u)}")
    pivots = _up_pivots(u, k)
    slots = _up_slots(u, k)
    if pivots:
        phi = frozenset(apply_transposition(u, i, k) for i in pivots)
    else:
        _, _, phi, _ = transition_sets(embed_left(u), k + 1)
        assert phi, "embedding did not produce pivots"
    if slots:
        psi = frozenset(apply_transposition(u, k, j) for j in slots)
    else:
        _, _, _, psi = transition_sets(embed_right(u), k)
        assert psi, "embedding did not produce slots"
    return frozenset(pivots), frozenset(slots), phi, psi


def _expand_box_tree(w: Perm, decorate: bool) -> TransitionTree:
    tree = TransitionTree("eg" if decorate else "mls", [])
    root = TreeNode(0, None, w, len(w), None, rothe(w) if decorate else None)
    tree.nodes.append(root)
    stack = [root]
    while stack:
        node = stack.pop()
        u = node.perm
        if is_dominant(u):
            if decorate:
                assert is_eg(node.pipedream) is not None, u
            continue
        p, q = max_pivot_box(u)
        if node.move is not None:
            parent = tree.nodes[node.parent]
            pp, pq, _ = node.move
            # Each expansion moves strictly up the box order.
            assert (p, u[q - 1]) < (pp, parent.perm[pq - 1]), (u, p, q)
        v = apply_transposition(u, p, q)
        pivots = _up_pivots(v, p)
        assert pivots, (u, p, q)
        slots = _up_slots(v, p)
        assert {apply_transposition(v, p, j) for j in slots} == {u}, (u, p, q)
        children = []
        for i in pivots:
            child_perm = apply_transposition(v, i, p)
            assert len(child_perm) == node.n, (u, child_perm)
            child = TreeNode(
                len(tree.nodes), node.id, child_perm, node.n, (p, q, i)
            )
            if decorate:
                child.pipedream = droop(
                    node.pipedream, (i, u[i - 1]), (p, u[q - 1])
                )
                assert frozenset(child.pipedream.empty_boxes()) == rothe_diagram(
                    child_perm
                ), (u, child_perm)
            tree.nodes.append(child)
            node.children.append(child.id)
            children.append(child)
        stack.extend(reversed(children))
    return tree


def mls_tree(w: Perm) -> TransitionTree:
    """
    The modified transition tree: every node keeps the ambient size of w
    and every leaf is dominant.
    """
    return _expand_box_tree(w, decorate=False)


def eg_tree(w: Perm) -> TransitionTree:
    """
    The modified transition tree with each node carrying the bumpless
    pipedream obtained by drooping along the node's transition; leaves
    carry the EG-pipedreams of w.
    """
    return _expand_box_tree(w, decorate=True)


def ls_tree(w: Perm) -> TransitionTree:
    """
    The classical transition tree: nodes with an empty pivot set gain a
    single embedded child 1 x w (with a larger ambient size and no move
    metadata), and every leaf is Grassmannian.

    A branch only ends once its Grassmannian permutation arrives through
    the smallest pivot of its parent's transition; one reached through a
    larger pivot is resolved further.  Those extra steps run through
    singleton transitions, so they leave the leaf shapes untouched and
    always settle.
    """
    tree = TransitionTree("ls", [])
    root = TreeNode(0, None, w, len(w), None)
    tree.nodes.append(root)
    stack = [root]
    while stack:
        node = stack.pop()
        u = node.perm
        if is_grassmannian(u) and (
            node.parent is None
            or (
                node.move is not None
                and tree.nodes[node.parent].children[0] == node.id
            )
        ):
            continue
        embed_run = 0
        probe = node
        while probe.parent is not None and probe.move is None:
            embed_run += 1
            probe = tree.nodes[probe.parent]
        if embed_run > 2 * len(w):
            raise RuntimeError(f"embedding guard exceeded at {u}")
        des = descents(u)
        r = des[-1]
        s = max(j for j in range(r + 1, node.n + 1) if u[j - 1] < u[r - 1])
        v = apply_transposition(u, r, s)
        pivots = _up_pivots(v, r)
        if not pivots:
            child = TreeNode(len(tree.nodes), node.id, embed_left(u), node.n + 1, None)
            tree.nodes.append(child)
            node.children.append(child.id)
            stack.append(child)
            continue
        children = []
        for i in pivots:
            child = TreeNode(
                len(tree.nodes),
                node.id,
                apply_transposition(v, i, r),
                node.n,
                (r, s, i),
            )
            tree.nodes.append(child)
            node.children.append(child.id)
            children.append(child)
        stack.extend(reversed(children))
    return tree


def leaf_path(tree: TransitionTree, leaf: TreeNode | int) -> list[TreeNode]:
    """Root-first path down to a leaf, move metadata included."""
    node = tree.nodes[leaf] if isinstance(leaf, int) else leaf
    if not node.leaf:
        raise ValueError(f"node {node.id} ({format_permutation(node.perm)}) is not a leaf")
    path = [node]
    while node.parent is not None:
        node = tree.nodes[node.parent]
        path.append(node)
    return path[::-1]


def to_json(tree: TransitionTree) -> dict:
    from .pipedreams import render

    return {
        "schema": 1,
        "kind": tree.kind,
        "nodes": [
            {
                "id": node.id,
                "parent": node.parent,
                "perm": list(node.perm),
                "n": node.n,
                "move": None
                if node.move is None
                else {"p": node.move[0], "q": node.move[1], "i": node.move[2]},
                "pipedream": None
                if node.pipedream is None
                else render(node.pipedream),
                "leaf": node.leaf,
            }
            for node in tree.nodes
        ],
    }


def render_ascii(tree: TransitionTree) -> str:
    lines: list[str] = []

    def label(node: TreeNode) -> str:
        text = format_permutation(node.perm)
        if node.move is not None:
            p, q, i = node.move
            text += f"  p={p} q={q} i={i}"
        elif node.parent is not None:
            text += "  embedded"
        return text

    def walk(node: TreeNode, prefix: str) -> None:
        for pos, child_id in enumerate(node.children):
            child = tree.nodes[child_id]
            last = pos == len(node.children) - 1
            lines.append(prefix + ("└─ " if last else "├─ ") + label(child))
            walk(child, prefix + ("   " if last else "│  "))

    lines.append(label(tree.root))
    walk(tree.root, "")
    return "\n".join(lines)
