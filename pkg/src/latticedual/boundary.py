"""Outermost boundaries of square components.

The tracer walks the border of the unbounded face of a finite union of
closed squares, keeping the occupied region on the left.  At a pinch corner
(two diagonally touching squares, both off-diagonal squares exterior) it
takes the sharp left turn, which splits the walk into edge-disjoint simple
cycles meeting only at such corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from . import _kernels
from .components import Component
from .cycles import Cycle, interior_squares
from .lattice import Corner, Edge, GridConfig, Square, edge_cosquares, make_edge


@dataclass(frozen=True)
class OutermostBoundary:
    """Cycles with pairwise disjoint interiors meeting only at pinch corners."""

    cycles: tuple[Cycle, ...]
    pinch_vertices: dict[Corner, frozenset[int]]

    def edge_set(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for c in self.cycles:
            out |= c.edge_set
        return frozenset(out)


@dataclass(frozen=True)
class CycleGraph:
    """Intersection graph of the boundary cycles (vertices are cycle indices)."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]


def exterior_vacant(squares: frozenset[Square]) -> tuple[frozenset[Square], tuple[int, int, int, int]]:
    """Vacant squares of the expanded bounding box reachable from infinity.

    Vacant squares communicate only through shared edges; squares of the set
    act as blockers.  Returns the reachable set and the expanded box.
    """
    xs = [x for x, _ in squares]
    ys = [y for _, y in squares]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    w, h = x1 - x0 + 1, y1 - y0 + 1
    occ = bytearray(w * h)
    for x, y in squares:
        occ[(y - y0) * w + (x - x0)] = 1
    reached = _kernels.flood_vacant(w, h, occ)
    ext = frozenset(
        (x0 + k % w, y0 + k // w) for k, r in enumerate(reached) if r
    )
    return ext, (x0, y0, x1, y1)


def _directed_boundary(squares: frozenset[Square], ext: frozenset[Square]):
    """Directed boundary edges (occupied kept on the left), keyed by tail corner."""
    out: dict[Corner, list[tuple[Corner, Corner]]] = {}

    def add(tail: Corner, head: Corner) -> None:
        out.setdefault(tail, []).append((tail, head))

    for x, y in squares:
        u, v = 2 * x, 2 * y
        if (x + 1, y) in ext:  # east wall, walk north
            add((u + 1, v - 1), (u + 1, v + 1))
        if (x - 1, y) in ext:  # west wall, walk south
            add((u - 1, v + 1), (u - 1, v - 1))
        if (x, y + 1) in ext:  # north wall, walk west
            add((u + 1, v + 1), (u - 1, v + 1))
        if (x, y - 1) in ext:  # south wall, walk east
            add((u - 1, v - 1), (u + 1, v - 1))
    return out


@lru_cache(maxsize=1 << 14)
def trace_outermost(squares: frozenset[Square]) -> OutermostBoundary:
    """Outermost boundary of a finite square set, as vertex-touching cycles."""
    if not squares:
        raise ValueError("empty component")
    ext, _ = exterior_vacant(squares)
    directed = _directed_boundary(squares, ext)
    visited: set[tuple[Corner, Corner]] = set()
    cycles: list[Cycle] = []
    for tail in sorted(directed):
        for start in directed[tail]:
            if start in visited:
                continue
            walk: list[Corner] = [start[0]]
            cur = start
            while True:
                visited.add(cur)
                head = cur[1]
                options = directed[head]
                if len(options) == 1:
                    nxt = options[0]
                else:
                    # pinch corner: sharp left turn stays on the same lobe
                    du, dv = head[0] - cur[0][0], head[1] - cur[0][1]
                    left = (head[0] - dv, head[1] + du)
                    nxt = next(o for o in options if o[1] == left)
                if nxt == start:
                    break
                walk.append(head)
                cur = nxt
            cycles.append(Cycle.from_walk(walk))
    cycles.sort(key=lambda c: c.corners)
    seen: dict[Corner, set[int]] = {}
    for i, c in enumerate(cycles):
        for v in c.corners:
            seen.setdefault(v, set()).add(i)
    pinch = {v: frozenset(ids) for v, ids in seen.items() if len(ids) > 1}
    return OutermostBoundary(tuple(cycles), pinch)


def outermost_boundary(comp: Component) -> OutermostBoundary:
    return trace_outermost(comp.squares)


def outermost_cycle_of(comp: Component, s: Square) -> Cycle:
    """The unique boundary cycle holding the given component square inside."""
    if s not in comp.squares:
        raise ValueError("square not in component")
    for c in trace_outermost(comp.squares).cycles:
        if s in interior_squares(c):
            return c
    raise ValueError("square not enclosed by any cycle")


def boundary_edges(grid: GridConfig, comp: Component) -> frozenset[Edge]:
    """Edges with one cosquare in the component and a vacant other cosquare."""
    out: set[Edge] = set()
    for x, y in comp.squares:
        u, v = 2 * x, 2 * y
        for nbr, e in (
            ((x + 1, y), make_edge((u + 1, v - 1), (u + 1, v + 1))),
            ((x - 1, y), make_edge((u - 1, v - 1), (u - 1, v + 1))),
            ((x, y + 1), make_edge((u - 1, v + 1), (u + 1, v + 1))),
            ((x, y - 1), make_edge((u - 1, v - 1), (u + 1, v - 1))),
        ):
            if grid.is_vacant(nbr):
                out.add(e)
    return frozenset(out)


def cycle_graph(b: OutermostBoundary) -> CycleGraph:
    n = len(b.cycles)
    edges: set[tuple[int, int]] = set()
    for i in range(n):
        vi = b.cycles[i].vertex_set
        for j in range(i + 1, n):
            if vi & b.cycles[j].vertex_set:
                edges.add((i, j))
    return CycleGraph(tuple(range(n)), frozenset(edges))


def is_acyclic(g: CycleGraph) -> bool:
    """Union-find cycle detection on the intersection graph."""
    parent = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def verify_outermost_properties(
    squares: frozenset[Square], b: OutermostBoundary
) -> list[str]:
    """Check the characterizing properties of an outermost boundary.

    Returns a list of human-readable violations (empty when all hold):
    connected union, pairwise disjoint interiors sharing at most one corner,
    every square inside exactly one cycle, every edge a boundary edge with
    its occupied cosquare inside its own cycle and the vacant one outside
    all cycles, and an acyclic cycle graph.
    """
    failures: list[str] = []
    cycles = b.cycles
    interiors = [interior_squares(c) for c in cycles]

    # (ii) connected union of cycles
    adj: dict[Corner, list[Corner]] = {}
    for c in cycles:
        for p, q in c.edges:
            adj.setdefault(p, []).append(q)
            adj.setdefault(q, []).append(p)
    if adj:
        seen = {next(iter(adj))}
        stack = list(seen)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            failures.append("boundary union not connected")

    # (iii) pairwise disjoint interiors, at most one shared corner
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not interiors[i].isdisjoint(interiors[j]):
                failures.append(f"cycles {i},{j} interiors intersect")
            if len(cycles[i].vertex_set & cycles[j].vertex_set) > 1:
                failures.append(f"cycles {i},{j} share more than one corner")

    # (iv) every component square inside exactly one cycle
    for s in squares:
        k = sum(1 for it in interiors if s in it)
        if k != 1:
            failures.append(f"square {s} inside {k} cycles")

    # (v) every edge a boundary edge, occupied side in, vacant side out
    for i, c in enumerate(cycles):
        for e in c.edges:
            a, bb = edge_cosquares(e)
            occ = [s for s in (a, bb) if s in squares]
            vac = [s for s in (a, bb) if s not in squares]
            if len(occ) != 1:
                failures.append(f"edge {e} not a boundary edge")
                continue
            if occ[0] not in interiors[i]:
                failures.append(f"edge {e} occupied side outside its cycle")
            if any(vac[0] in it for it in interiors):
                failures.append(f"edge {e} vacant side not exterior to all")

    if not is_acyclic(cycle_graph(b)):
        failures.append("cycle graph contains a cycle")
    return failures
