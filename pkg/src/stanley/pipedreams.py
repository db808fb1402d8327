"""
Bumpless pipedreams on an n x n grid, in matrix coordinates (row 1 at the
top).  Pipe i enters from the south boundary in column i heading north and
exits from the east boundary in row w^-1(i); pipes only move north and
east, and no two pipes cross twice.

Each box holds one of six tiles, stored as single characters:

    '.'  empty box            '-'  horizontal line
    'r'  SE elbow (south+east)  '|'  vertical line
    'j'  NW elbow (west+north)  '+'  crossing

>>> print(render(rothe((2, 1, 3))))
.r-
r+-
||r
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import Perm, inverse, is_dominant, length
from .polynomials import SparsePoly

Box = tuple[int, int]

EDGES = {
    ".": frozenset(),
    "r": frozenset("SE"),
    "j": frozenset("WN"),
    "-": frozenset("WE"),
    "|": frozenset("SN"),
    "+": frozenset("SEWN"),
}
KIND_NAMES = {
    ".": "Empty",
    "r": "SEElbow",
    "j": "NWElbow",
    "-": "Horizontal",
    "|": "Vertical",
    "+": "Crossing",
}
UNICODE_TILES = {"r": "┌", "j": "┘", "-": "─", "|": "│", "+": "┼"}
FROM_UNICODE = {v: k for k, v in UNICODE_TILES.items()}


@dataclass(frozen=True)
class BumplessPipedream:
    n: int
    rows: tuple[str, ...]

    def tile(self, i: int, j: int) -> str:
        return self.rows[i - 1][j - 1]

    def replace(self, changes: dict[Box, str]) -> "BumplessPipedream":
        grid = [list(row) for row in self.rows]
        for (i, j), t in changes.items():
            grid[i - 1][j - 1] = t
        return BumplessPipedream(self.n, tuple("".join(row) for row in grid))

    def empty_boxes(self) -> list[Box]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) == "."
        ]

    def nw_elbows(self) -> list[Box]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) == "j"
        ]

    def se_elbows(self) -> list[Box]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) == "r"
        ]


def rothe(w: Perm) -> BumplessPipedream:
    """
    The droop-free pipedream of w: an SE elbow at each (i, w_i) with rays
    east and south, crossing where rays meet.  Its empty boxes are the
    Rothe diagram of w.
    """
    n = len(w)
    inv = inverse(w)
    grid = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == w[i - 1]:
                row.append("r")
            else:
                horizontal = j > w[i - 1]
                vertical = i > inv[j - 1]
                row.append(
                    "+" if horizontal and vertical
                    else "-" if horizontal
                    else "|" if vertical
                    else "."
                )
        grid.append("".join(row))
    return BumplessPipedream(n, tuple(grid))


def rothe_diagram(w: Perm) -> frozenset[Box]:
    """Boxes (i, j) with j < w_i and j appearing in w after position i."""
    n = len(w)
    inv = inverse(w)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if j < w[i - 1] and i < inv[j - 1]
    )


def validate(p: BumplessPipedream) -> Perm:
    """
    Check tile kinds, edge consistency against neighbors and the boundary,
    and the no-double-crossing condition; return the traced permutation.
    """
    n = p.n
    if len(p.rows) != n or any(len(row) != n for row in p.rows):
        raise ValueError(f"grid is not {n}x{n}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            t = p.tile(i, j)
            if t not in EDGES:
                raise ValueError(f"unknown tile {t!r} at ({i},{j})")
            edges = EDGES[t]
            if i == 1 and "N" in edges:
                raise ValueError(f"pipe leaves the north boundary at ({i},{j})")
            if j == 1 and "W" in edges:
                raise ValueError(f"pipe enters from the west boundary at ({i},{j})")
            if i == n and "S" not in edges:
                raise ValueError(f"missing south entry at the boundary ({i},{j})")
            if j == n and "E" not in edges:
                raise ValueError(f"missing east exit at the boundary ({i},{j})")
            if i < n and ("S" in edges) != ("N" in EDGES[p.tile(i + 1, j)]):
                raise ValueError(f"dangling vertical edge between ({i},{j}) and ({i + 1},{j})")
            if j < n and ("E" in edges) != ("W" in EDGES[p.tile(i, j + 1)]):
                raise ValueError(f"dangling horizontal edge between ({i},{j}) and ({i},{j + 1})")
    exit_row_of_pipe = [0] * (n + 1)
    for c in range(1, n + 1):
        i, j, heading = n, c, "N"
        while True:
            t = p.tile(i, j)
            if heading == "N":
                heading = "E" if t == "r" else "N"
            else:
                heading = "N" if t == "j" else "E"
            if heading == "E" and j == n:
                exit_row_of_pipe[c] = i
                break
            i, j = (i - 1, j) if heading == "N" else (i, j + 1)
    perm = [0] * n
    for pipe in range(1, n + 1):
        perm[exit_row_of_pipe[pipe] - 1] = pipe
    w = tuple(perm)
    crossings = sum(row.count("+") for row in p.rows)
    if crossings != length(w):
        raise ValueError(
            f"{crossings} crossings for a permutation of length {length(w)}: "
            "some pair of pipes crosses twice"
        )
    return w


def droop(p: BumplessPipedream, elbow: Box, target: Box) -> BumplessPipedream:
    """
    Swap the SE elbow at `elbow` with the empty box at `target` (strictly
    southeast of it), rerouting the elbow's pipe from the west column and
    north row of the spanned rectangle to the south row and east column.

    Raises ValueError when the move is illegal: (1) the pipe does not run
    along the rectangle's west column and north row, (2) the rectangle
    holds a second elbow, (3) the rerouted pipe would collide with another
    pipe or break the grid.
    """
    (a, b), (c, d) = elbow, target
    if p.tile(a, b) != "r":
        raise ValueError(f"no SE elbow at {elbow}")
    if p.tile(c, d) != ".":
        raise ValueError(f"target {target} is not an empty box")
    if not (a < c and b < d):
        raise ValueError(f"target {target} is not strictly southeast of {elbow}")
    if any(p.tile(i, b) not in "|+" for i in range(a + 1, c + 1)) or any(
        p.tile(a, j) not in "-+" for j in range(b + 1, d + 1)
    ):
        raise ValueError(
            "condition (1): the pipe must run along the west column and "
            "north row of the rectangle"
        )
    for i in range(a, c + 1):
        for j in range(b, d + 1):
            if (i, j) != (a, b) and p.tile(i, j) in "rj":
                raise ValueError(
                    f"condition (2): the rectangle contains another elbow at ({i},{j})"
                )
    changes: dict[Box, str] = {(a, b): ".", (c, d): "j"}
    reroute = [
        ((c, b), {"|": "r"}),
        ((a, d), {"-": "r"}),
    ]
    for i in range(a + 1, c):
        reroute.append(((i, b), {"|": ".", "+": "-"}))
        reroute.append(((i, d), {".": "|", "-": "+"}))
    for j in range(b + 1, d):
        reroute.append(((a, j), {"-": ".", "+": "|"}))
        reroute.append(((c, j), {".": "-", "|": "+"}))
    for box, table in reroute:
        tile = p.tile(*box)
        if tile not in table:
            raise ValueError(
                f"condition (3): cannot reroute through {KIND_NAMES[tile]} at {box}"
            )
        changes[box] = table[tile]
    out = p.replace(changes)
    try:
        traced = validate(out)
    except ValueError as exc:
        raise ValueError(f"condition (3): droop result is not a pipedream: {exc}")
    assert traced == validate(p), "droop changed the traced permutation"
    return out


def reverse_droop(p: BumplessPipedream, nw: Box) -> BumplessPipedream:
    """
    Undo the droop that produced the NW elbow at `nw`: find the SE elbows
    west and north of it, lift the pipe back onto the rectangle's west
    column and north row, and free the target box.
    """
    m, jm = nw
    if p.tile(m, jm) != "j":
        raise ValueError(f"no NW elbow at {nw}")
    y = next((j for j in range(jm - 1, 0, -1) if p.tile(m, j) == "r"), None)
    if y is None or any(p.tile(m, j) not in "-+" for j in range(y + 1, jm)):
        raise ValueError(f"no pipe running west from {nw} to an SE elbow")
    x = next((i for i in range(m - 1, 0, -1) if p.tile(i, jm) == "r"), None)
    if x is None or any(p.tile(i, jm) not in "|+" for i in range(x + 1, m)):
        raise ValueError(f"no pipe running north from {nw} to an SE elbow")
    if p.tile(x, y) != ".":
        raise ValueError(f"northwest corner ({x},{y}) is not an empty box")
    for i in range(x, m + 1):
        for j in range(y, jm + 1):
            if (i, j) not in ((m, y), (x, jm), (m, jm)) and p.tile(i, j) in "rj":
                raise ValueError(
                    f"the rectangle contains another elbow at ({i},{j})"
                )
    changes: dict[Box, str] = {
        (x, y): "r",
        (m, y): "|",
        (x, jm): "-",
        (m, jm): ".",
    }
    undo = []
    for i in range(x + 1, m):
        undo.append(((i, y), {".": "|", "-": "+"}))
        undo.append(((i, jm), {"|": ".", "+": "-"}))
    for j in range(y + 1, jm):
        undo.append(((x, j), {".": "-", "|": "+"}))
        undo.append(((m, j), {"-": ".", "+": "|"}))
    for box, table in undo:
        tile = p.tile(*box)
        if tile not in table:
            raise ValueError(
                f"cannot lift the pipe through {KIND_NAMES[tile]} at {box}"
            )
        changes[box] = table[tile]
    out = p.replace(changes)
    traced = validate(out)
    assert traced == validate(p), "reverse droop changed the traced permutation"
    assert droop(out, (x, y), (m, jm)) == p, "reverse droop is not a droop inverse"
    return out


def pivots(w: Perm, box: Box) -> list[Box]:
    """
    The pivots of an empty box of the Rothe pipedream: SE elbows strictly
    northwest of it whose spanned rectangle holds no other elbow.

    >>> pivots((2, 3, 1, 6, 5, 4), (5, 4))
    [(2, 3), (3, 1)]
    """
    if box not in rothe_diagram(w):
        raise ValueError(f"{box} is not an empty box of the Rothe pipedream")
    bi, bj = box
    out = []
    for i in range(1, bi):
        if w[i - 1] >= bj:
            continue
        if any(
            k != i and w[i - 1] <= w[k - 1] <= bj for k in range(i, bi + 1)
        ):
            continue
        out.append((i, w[i - 1]))
    return sorted(out)


def pivot_boxes(w: Perm) -> list[Box]:
    """Empty Rothe boxes that have at least one pivot, in row-major order."""
    return sorted(box for box in rothe_diagram(w) if pivots(w, box))


def max_pivot_box(w: Perm) -> tuple[int, int]:
    """
    The indices (p, q) locating the largest pivoted empty box (p, w_q) of
    the Rothe pipedream in row-major order: p is the largest position
    topping a 132 pattern, and q indexes the largest value after p that is
    smaller than w_p.

    >>> max_pivot_box((2, 3, 1, 6, 5, 4))
    (5, 6)
    """
    n = len(w)
    if is_dominant(w):
        raise ValueError(f"{w} is dominant: no empty box has a pivot")
    p = max(
        t
        for t in range(2, n)
        if any(
            w[i - 1] < w[j - 1] < w[t - 1]
            for i in range(1, t)
            for j in range(t + 1, n + 1)
        )
    )
    q = max(
        j
        for j in range(p + 1, n + 1)
        if w[j - 1] < w[p - 1]
        and any(w[i - 1] < w[j - 1] for i in range(1, p))
    )
    # q also indexes the largest value below w_p appearing after p.
    assert w[q - 1] == max(v for v in w[p:] if v < w[p - 1]), (w, p, q)
    assert (p, w[q - 1]) == pivot_boxes(w)[-1], (w, p, q)
    return p, q


def weight(p: BumplessPipedream) -> SparsePoly:
    """The product of x_i - y_j over the empty boxes (i, j)."""
    out = SparsePoly.constant(1)
    for i, j in p.empty_boxes():
        out = out * (SparsePoly.x(i) - SparsePoly.y(j))
    return out


def is_eg(p: BumplessPipedream) -> tuple[int, ...] | None:
    """
    The shape of an EG-pipedream: the partition formed when all empty
    boxes are justified against the northwest corner; None otherwise.
    """
    row_counts = []
    for i in range(1, p.n + 1):
        cols = [j for j in range(1, p.n + 1) if p.tile(i, j) == "."]
        if cols != list(range(1, len(cols) + 1)):
            return None
        row_counts.append(len(cols))
    while row_counts and row_counts[-1] == 0:
        row_counts.pop()
    if 0 in row_counts or any(
        a < b for a, b in zip(row_counts, row_counts[1:])
    ):
        return None
    return tuple(row_counts)


def enumerate_all(w: Perm) -> list[BumplessPipedream]:
    """
    Every bumpless pipedream of w: the closure of the Rothe pipedream
    under droops, sorted by grid for determinism.
    """
    start = rothe(w)
    seen = {start.rows: start}
    frontier = [start]
    while frontier:
        p = frontier.pop()
        for elbow in p.se_elbows():
            for target in p.empty_boxes():
                if not (elbow[0] < target[0] and elbow[1] < target[1]):
                    continue
                try:
                    q = droop(p, elbow, target)
                except ValueError:
                    continue
                if q.rows not in seen:
                    seen[q.rows] = q
                    frontier.append(q)
    return [seen[key] for key in sorted(seen)]


def render(p: BumplessPipedream, unicode: bool = False) -> str:
    if not unicode:
        return "\n".join(p.rows)
    return "\n".join(
        "".join(UNICODE_TILES.get(t, t) for t in row) for row in p.rows
    )


def parse(text: str) -> BumplessPipedream:
    """Read a grid in either character set; syntax only, no validation."""
    rows = [line.strip() for line in text.strip().splitlines()]
    rows = tuple(
        "".join(FROM_UNICODE.get(t, t) for t in row) for row in rows if row
    )
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("grid is not square")
    for row in rows:
        for t in row:
            if t not in EDGES:
                raise ValueError(f"unknown tile {t!r}")
    return BumplessPipedream(n, rows)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
