"""Connected components under both adjacencies and the vacant-square graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _kernels
from .cycles import Cycle, interior_squares
from .lattice import (
    GridConfig,
    Square,
    edge_cosquares,
    plus_neighbors,
    star_adjacent,
)


@dataclass(frozen=True)
class Component:
    kind: str  # "plus" or "star"
    squares: frozenset[Square]
    seed: Square

    def ordered(self) -> tuple[Square, ...]:
        """Member squares in lexicographic order (serialization order)."""
        return tuple(sorted(self.squares))

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [x for x, _ in self.squares]
        ys = [y for _, y in self.squares]
        return (min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True)
class LambdaSets:
    """Vacant squares hugging a plus component.

    ``lambda_all`` holds every vacant square sharing an edge with the
    component (holes included); ``lambda_exterior`` only those lying in the
    exterior of the component's outermost cycle with an edge on it.
    """

    lambda_all: frozenset[Square]
    lambda_exterior: frozenset[Square]


@dataclass(frozen=True)
class VacantGraph:
    vertices: frozenset[Square]
    edges: frozenset[tuple[Square, Square]]


def component_of(grid: GridConfig, seed: Square, kind: str) -> Component:
    """Maximal occupied component of the seed under the given adjacency."""
    if kind not in ("plus", "star"):
        raise ValueError(f"unknown adjacency kind {kind!r}")
    if grid.is_vacant(seed):
        raise ValueError("seed vacant")
    x0, y0, x1, y1 = grid.window
    w, h = x1 - x0 + 1, y1 - y0 + 1
    occ = bytearray(w * h)
    for x, y in grid.occupied:
        occ[(y - y0) * w + (x - x0)] = 1
    labels = _kernels.label_component(
        w, h, occ, (seed[1] - y0) * w + (seed[0] - x0), kind == "star"
    )
    squares = frozenset(
        (x0 + k % w, y0 + k // w) for k, m in enumerate(labels) if m
    )
    return Component(kind, squares, seed)


def is_finite(grid: GridConfig, comp: Component) -> bool:
    """True when no component square sits on the window border ring."""
    return not any(grid.on_border(s) for s in comp.squares)


def lambda_sets(grid: GridConfig, comp: Component, outer: Cycle) -> LambdaSets:
    """Both vacant-neighbour sets of a plus component given its outer cycle."""
    lam_all = {
        n
        for s in comp.squares
        for n in plus_neighbors(s)
        if grid.is_vacant(n)
    }
    inner = interior_squares(outer)
    lam_ext = set()
    for e in outer.edges:
        a, b = edge_cosquares(e)
        outside = b if a in inner else a
        if grid.is_vacant(outside):
            lam_ext.add(outside)
    return LambdaSets(frozenset(lam_all), frozenset(lam_ext))


def vacant_graph(squares: Iterable[Square]) -> VacantGraph:
    """Star-adjacency graph induced on the given squares."""
    verts = sorted(set(squares))
    edges = set()
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            if b[0] - a[0] > 1:
                break
            if star_adjacent(a, b):
                edges.add((a, b))
    return VacantGraph(frozenset(verts), frozenset(edges))


def contains_cycle(g: VacantGraph) -> bool:
    """Union-find: an edge joining an already-joined pair closes a cycle."""
    parent = {v: v for v in g.vertices}

    def find(v: Square) -> Square:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False
