"""Exact integer geometry for the unit-square tiling of the plane.

Squares are addressed by their integer centre ``(x, y)``.  Corners live on a
doubled-coordinate grid so that every corner of every square has odd integer
coordinates: the corner ``(u, v)`` (doubled) is the real point ``(u/2, v/2)``.
All predicates below are exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Square = tuple[int, int]  # unit-square centre (x, y)
Corner = tuple[int, int]  # square corner in doubled coordinates, both odd
Edge = tuple[Corner, Corner]  # axis-aligned unit segment, endpoints sorted

# Neighbour offsets in lexicographic order, so every traversal that walks
# them is reproducible.
PLUS_OFFSETS: tuple[Square, ...] = ((-1, 0), (0, -1), (0, 1), (1, 0))
STAR_OFFSETS: tuple[Square, ...] = (
    (-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1),
)


def plus_adjacent(a: Square, b: Square) -> bool:
    """True iff the squares share an edge.  A square is not adjacent to itself."""
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def star_adjacent(a: Square, b: Square) -> bool:
    """True iff the squares share at least a corner (edge contact included)."""
    if a == b:
        return False
    return max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1


def plus_neighbors(s: Square) -> Iterator[Square]:
    x, y = s
    for dx, dy in PLUS_OFFSETS:
        yield (x + dx, y + dy)


def star_neighbors(s: Square) -> Iterator[Square]:
    x, y = s
    for dx, dy in STAR_OFFSETS:
        yield (x + dx, y + dy)


def square_corners(s: Square) -> tuple[Corner, Corner, Corner, Corner]:
    """The four corners of a square, counterclockwise from the bottom-left."""
    x2, y2 = 2 * s[0], 2 * s[1]
    return (
        (x2 - 1, y2 - 1),
        (x2 + 1, y2 - 1),
        (x2 + 1, y2 + 1),
        (x2 - 1, y2 + 1),
    )


def make_edge(p: Corner, q: Corner) -> Edge:
    """Canonical (sorted-endpoint) edge between two corners at doubled distance 2."""
    if p[0] % 2 == 0 or p[1] % 2 == 0 or q[0] % 2 == 0 or q[1] % 2 == 0:
        raise ValueError("not a lattice edge")
    du, dv = q[0] - p[0], q[1] - p[1]
    if not ((abs(du) == 2 and dv == 0) or (du == 0 and abs(dv) == 2)):
        raise ValueError("not a lattice edge")
    return (p, q) if p <= q else (q, p)


def square_boundary(s: Square) -> list[Edge]:
    """The four edges of a square, counterclockwise starting from the bottom edge."""
    bl, br, tr, tl = square_corners(s)
    return [
        make_edge(bl, br),
        make_edge(br, tr),
        make_edge(tr, tl),
        make_edge(tl, bl),
    ]


def edge_cosquares(e: Edge) -> tuple[Square, Square]:
    """The two squares having ``e`` on their boundary, in lexicographic order.

    Those squares always share the edge, hence are plus adjacent.
    """
    (u1, v1), (u2, v2) = e
    make_edge((u1, v1), (u2, v2))  # validates shape
    if u1 == u2:  # vertical edge: squares to its west and east
        y = (min(v1, v2) + 1) // 2
        return (((u1 - 1) // 2, y), ((u1 + 1) // 2, y))
    x = (min(u1, u2) + 1) // 2
    return ((x, (v1 - 1) // 2), (x, (v1 + 1) // 2))


@dataclass(frozen=True)
class GridConfig:
    """A finite window of squares with an occupancy set and a designated origin.

    Every square outside the window is vacant by definition, never unknown.
    """

    window: tuple[int, int, int, int]  # inclusive (x0, y0, x1, y1)
    occupied: frozenset[Square]
    origin: Square = (0, 0)

    def __post_init__(self) -> None:
        x0, y0, x1, y1 = self.window
        if x0 > x1 or y0 > y1:
            raise ValueError("empty window")
        if not self.in_window(self.origin):
            raise ValueError("origin outside window")
        if self.origin not in self.occupied:
            raise ValueError("origin must be occupied")
        for s in self.occupied:
            if not self.in_window(s):
                raise ValueError(f"occupied square {s} outside window")

    def in_window(self, s: Square) -> bool:
        x0, y0, x1, y1 = self.window
        return x0 <= s[0] <= x1 and y0 <= s[1] <= y1

    def is_occupied(self, s: Square) -> bool:
        return s in self.occupied

    def is_vacant(self, s: Square) -> bool:
        return s not in self.occupied

    def on_border(self, s: Square) -> bool:
        x0, y0, x1, y1 = self.window
        return s[0] in (x0, x1) or s[1] in (y0, y1)

    def squares(self) -> Iterator[Square]:
        """All window squares in lexicographic order."""
        x0, y0, x1, y1 = self.window
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                yield (x, y)
