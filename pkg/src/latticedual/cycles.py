"""Cycles on the corner lattice: exact interiors, bridges, gaps and merging.

A cycle here is a simple closed curve made of lattice edges: every corner it
touches is incident to exactly two of its edges.  Cycles are canonicalized on
construction (counterclockwise, starting at the lexicographically smallest
corner) so that equal curves compare equal, which in turn lets interior
computations be memoized.

Merging follows the bridge/base/gap bookkeeping: the bridges of a cycle C for
a cycle D are the maximal subpaths of C running through D's exterior between
two corners of D; each bridge replaces its base (the D-subpath that closes an
interior-free "gap" with it) in the evolving cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels
from .lattice import Corner, Edge, Square, edge_cosquares, make_edge, square_boundary


def _signed_area2(corners: Sequence[Corner]) -> int:
    """Twice the signed area (doubled coords) of the closed corner walk."""
    total = 0
    n = len(corners)
    for i in range(n):
        u1, v1 = corners[i]
        u2, v2 = corners[(i + 1) % n]
        total += u1 * v2 - u2 * v1
    return total


@dataclass(frozen=True)
class Cycle:
    """A simple closed lattice curve in canonical orientation.

    ``corners`` is the open walk ``v_0 .. v_{n-1}`` with the closing step
    ``v_{n-1} -> v_0`` implicit; ``v_0`` is the smallest corner and the walk
    is counterclockwise.
    """

    corners: tuple[Corner, ...]
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(self.corners))

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.corners)

    @property
    def edges(self) -> tuple[Edge, ...]:
        try:
            return self._edges  # type: ignore[attr-defined]
        except AttributeError:
            cs = self.corners
            n = len(cs)
            edges = tuple(
                (a, b) if a <= b else (b, a)
                for a, b in ((cs[i], cs[(i + 1) % n]) for i in range(n))
            )
            object.__setattr__(self, "_edges", edges)
            return edges

    @property
    def edge_set(self) -> frozenset[Edge]:
        try:
            return self._edge_set  # type: ignore[attr-defined]
        except AttributeError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", es)
            return es

    @property
    def vertex_set(self) -> frozenset[Corner]:
        try:
            return self._vertex_set  # type: ignore[attr-defined]
        except AttributeError:
            vs = frozenset(self.corners)
            object.__setattr__(self, "_vertex_set", vs)
            return vs

    def corners_closed(self) -> tuple[Corner, ...]:
        """The walk with the first corner repeated at the end."""
        return self.corners + (self.corners[0],)

    @classmethod
    def from_walk(cls, walk: Sequence[Corner]) -> "Cycle":
        """Build a cycle from a closed corner walk (first corner not repeated)."""
        n = len(walk)
        if n < 4:
            raise ValueError("not a cycle")
        if len(set(walk)) != n:
            raise ValueError("not a cycle")
        for i in range(n):
            u1, v1 = walk[i]
            u2, v2 = walk[(i + 1) % n]
            if not (u1 & 1 and v1 & 1):
                raise ValueError("not a lattice edge")
            du, dv = u2 - u1, v2 - v1
            if not (du == 0 and (dv == 2 or dv == -2)) and not (
                dv == 0 and (du == 2 or du == -2)
            ):
                raise ValueError("not a cycle")
        area2 = _signed_area2(walk)
        if area2 == 0:
            raise ValueError("not a cycle")
        ordered = tuple(walk) if area2 > 0 else tuple(reversed(walk))
        k = ordered.index(min(ordered))
        return cls(ordered[k:] + ordered[:k])

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Cycle":
        """Build a cycle from an unordered collection of edges.

        Raises ``ValueError("not a cycle")`` when some corner has degree != 2
        or the edges do not form a single closed loop.
        """
        edge_list = list(edges)
        if len(set(edge_list)) != len(edge_list):
            raise ValueError("not a cycle")
        adj: dict[Corner, list[Corner]] = {}
        for p, q in edge_list:
            adj.setdefault(p, []).append(q)
            adj.setdefault(q, []).append(p)
        for nbrs in adj.values():
            if len(nbrs) != 2:
                raise ValueError("not a cycle")
        start = min(adj)
        walk = [start]
        prev, cur = None, start
        while True:
            a, b = adj[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        if len(walk) != len(edge_list):
            raise ValueError("not a cycle")
        return cls.from_walk(walk)


def square_cycle(s: Square) -> Cycle:
    """The 4-edge cycle bounding one square."""
    return Cycle.from_edges(square_boundary(s))


@lru_cache(maxsize=1 << 14)
def interior_squares(c: Cycle) -> frozenset[Square]:
    """Exactly the squares enclosed by the cycle.

    Computed by flooding the exterior of an expanded bounding box with the
    cycle's edges acting as walls; unreached squares are interior.  The
    independent ray-casting oracle cross-checks this in the test suite.
    """
    us = [u for u, _ in c.corners]
    vs = [v for _, v in c.corners]
    x0 = (min(us) + 1) // 2 - 1
    x1 = (max(us) - 1) // 2 + 1
    y0 = (min(vs) + 1) // 2 - 1
    y1 = (max(vs) - 1) // 2 + 1
    w = x1 - x0 + 1
    h = y1 - y0 + 1
    vwall = bytearray((w + 1) * h)
    hwall = bytearray(w * (h + 1))
    for (u1, v1), (u2, v2) in c.edges:
        if u1 == u2:  # vertical edge: wall between west and east squares
            i = (u1 + 1) // 2 - x0
            j = (min(v1, v2) + 1) // 2 - y0
            vwall[j * (w + 1) + i] = 1
        else:  # horizontal edge: wall between south and north squares
            i = (min(u1, u2) + 1) // 2 - x0
            j = (v1 + 1) // 2 - y0
            hwall[j * w + i] = 1
    reached = _kernels.flood_exterior(w, h, vwall, hwall)
    return frozenset(
        (x0 + k % w, y0 + k // w) for k, r in enumerate(reached) if not r
    )


@dataclass(frozen=True)
class LatticePath:
    """A self-avoiding open path of lattice edges, stored as its corner walk."""

    corners: tuple[Corner, ...]

    def __post_init__(self) -> None:
        if len(self.corners) < 2 or len(set(self.corners)) != len(self.corners):
            raise ValueError("not a self-avoiding path")

    @property
    def edges(self) -> tuple[Edge, ...]:
        try:
            return self._edges  # type: ignore[attr-defined]
        except AttributeError:
            cs = self.corners
            edges = tuple(make_edge(cs[i], cs[i + 1]) for i in range(len(cs) - 1))
            object.__setattr__(self, "_edges", edges)
            return edges

    @property
    def edge_set(self) -> frozenset[Edge]:
        try:
            return self._edge_set  # type: ignore[attr-defined]
        except AttributeError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", es)
            return es

    @property
    def endvertices(self) -> tuple[Corner, Corner]:
        return (self.corners[0], self.corners[-1])

    def interior_corners(self) -> tuple[Corner, ...]:
        return self.corners[1:-1]

    def same_curve(self, other: "LatticePath") -> bool:
        """True when both paths traverse the same edges (direction ignored)."""
        return self.edge_set == other.edge_set


@dataclass(frozen=True)
class BridgeSet:
    bridges: tuple[LatticePath, ...]
    host: Cycle
    target: Cycle


@dataclass(frozen=True)
class BridgeDecomposition:
    p1: LatticePath  # subpath of the target cycle D
    p2: LatticePath  # subpath of the host cycle C
    merged: Cycle


def _edge_side(e: Edge, d: Cycle, d_interior: frozenset[Square]) -> str:
    """'on', 'int' or 'ext': where the edge sits relative to cycle d.

    An edge not on d has both cosquares in the same face, so testing one
    cosquare suffices.
    """
    if e in d.edge_set:
        return "on"
    return "int" if edge_cosquares(e)[0] in d_interior else "ext"


def find_bridges(c: Cycle, d: Cycle) -> BridgeSet:
    """All bridges of c for d: maximal c-subpaths through d's exterior.

    Runs of exterior edges are additionally split at any corner lying on d,
    since a bridge's interior corners must be strictly exterior.
    """
    d_int = interior_squares(d)
    d_verts = d.vertex_set
    n = len(c.corners)
    sides = [_edge_side(e, d, d_int) for e in c.edges]
    if "ext" not in sides:
        return BridgeSet((), c, d)
    if all(s == "ext" for s in sides):
        # c never runs along or inside d; it can only touch d at corners.
        touches = sorted(i for i, v in enumerate(c.corners) if v in d_verts)
        if len(touches) < 2:
            return BridgeSet((), c, d)
        runs = []
        for a, b in zip(touches, touches[1:] + [touches[0] + n]):
            runs.append([c.corners[k % n] for k in range(a, b + 1)])
        return BridgeSet(tuple(LatticePath(tuple(r)) for r in runs), c, d)
    # Rotate so the walk starts on a non-exterior edge, making runs contiguous.
    k = next(i for i, s in enumerate(sides) if s != "ext")
    bridges: list[LatticePath] = []
    run: list[Corner] = []
    for off in range(1, n + 1):
        i = (k + off) % n
        if sides[i] == "ext":
            if not run:
                run = [c.corners[i]]
            run.append(c.corners[(i + 1) % n])
            if c.corners[(i + 1) % n] in d_verts:
                bridges.append(LatticePath(tuple(run)))
                run = []
        else:
            if run:  # run ended on a corner of d implicitly (face change)
                bridges.append(LatticePath(tuple(run)))
                run = []
    for b in bridges:
        a, z = b.endvertices
        if a not in d_verts or z not in d_verts:
            raise ValueError("not a bridge for cycle")
    return BridgeSet(tuple(bridges), c, d)


def _split_at(d: Cycle, a: Corner, b: Corner) -> tuple[LatticePath, LatticePath]:
    """The two subpaths of cycle d between distinct corners a and b."""
    cs = d.corners
    n = len(cs)
    ia, ib = cs.index(a), cs.index(b)
    first = [cs[(ia + k) % n] for k in range((ib - ia) % n + 1)]
    second = [cs[(ib + k) % n] for k in range((ia - ib) % n + 1)]
    return LatticePath(tuple(first)), LatticePath(tuple(second))


def _close_with(bridge: LatticePath, sub: LatticePath) -> Cycle:
    """The cycle formed by a bridge (a -> b) and a subpath joining b back to a."""
    if sub.corners[0] == bridge.corners[-1]:  # sub runs b -> a
        walk = bridge.corners + sub.corners[1:-1]
    else:  # sub runs a -> b
        walk = bridge.corners + tuple(reversed(sub.corners))[1:-1]
    return Cycle.from_walk(walk)


def gap_of(bridge: LatticePath, d: Cycle) -> tuple[Cycle, LatticePath]:
    """The gap cycle of a bridge and its base subpath of d.

    Of the two cycles formed by the bridge and either d-subpath joining its
    endvertices, exactly one encloses no square of d's interior: that one is
    the gap, and the d-subpath in it is the base.
    """
    a, b = bridge.endvertices
    if a == b or a not in d.vertex_set or b not in d.vertex_set:
        raise ValueError("not a bridge for cycle")
    d_int = interior_squares(d)
    candidates = []
    for sub in _split_at(d, a, b):
        cyc = _close_with(bridge, sub)
        if interior_squares(cyc).isdisjoint(d_int):
            candidates.append((cyc, sub))
    if len(candidates) != 1:
        raise ValueError("gap undefined")
    return candidates[0]


def merge_cycles(c: Cycle, d: Cycle) -> Cycle:
    """Merge c into d bridge by bridge; the result encloses both interiors.

    Each round recomputes the bridges of c for the evolving cycle and folds
    the one with the lexicographically smallest edge, so runs are
    reproducible; the final cycle is order independent (tested separately).
    Two invariants are checked while folding: the merged interior must be
    the disjoint union of the previous interior and the gap, and whenever a
    bridge's gap against the original cycle is still applicable it must
    coincide with the gap actually used.
    """
    if c == d:
        return d
    if len(c.vertex_set & d.vertex_set) < 2:
        raise ValueError("not mergeable")
    d_int = interior_squares(d)
    for e in c.edges:
        if _edge_side(e, d, d_int) == "int":
            raise ValueError("interiors intersect")
    current = d
    while True:
        bridges = find_bridges(c, current).bridges
        if not bridges:
            break
        bridge = min(bridges, key=lambda p: min(p.edges))
        gap, base = gap_of(bridge, current)
        cur_int = interior_squares(current)
        first, second = _split_at(current, *bridge.endvertices)
        keep = second if first.same_curve(base) else first
        merged = _close_with(bridge, keep)
        m_int = interior_squares(merged)
        g_int = interior_squares(gap)
        if not cur_int.isdisjoint(g_int) or m_int != (cur_int | g_int):
            raise ValueError("merge invariant violated: interiors")
        a, b = bridge.endvertices
        if a in d.vertex_set and b in d.vertex_set:
            try:
                gap0, _ = gap_of(bridge, d)
            except ValueError:
                gap0 = None
            if (
                gap0 is not None
                and interior_squares(gap0).isdisjoint(cur_int)
                and gap0 != gap
            ):
                raise ValueError("merge invariant violated: gap changed")
        current = merged
    if not (interior_squares(c) <= interior_squares(current)):
        raise ValueError("merge invariant violated: host interior not contained")
    return current


def bridge_decomposition(c: Cycle, d: Cycle) -> BridgeDecomposition:
    """The unique two-bridge cycle enclosing both of two disjoint-interior cycles.

    Finds the bridge of c for d whose gap swallows all of c, and closes it
    with the complementary d-subpath.
    """
    c_int = interior_squares(c)
    d_int = interior_squares(d)
    if not c_int.isdisjoint(d_int):
        raise ValueError("interiors intersect")
    if len(c.vertex_set & d.vertex_set) < 2:
        raise ValueError("not mergeable")
    hits = []
    for bridge in find_bridges(c, d).bridges:
        gap, base = gap_of(bridge, d)
        if c_int <= interior_squares(gap):
            hits.append((bridge, base))
    if len(hits) != 1:
        raise ValueError("gap undefined")
    p2, base = hits[0]
    a, b = p2.endvertices
    first, second = _split_at(d, a, b)
    p1 = second if first.same_curve(base) else first
    merged = _close_with(p2, p1)
    return BridgeDecomposition(p1=p1, p2=p2, merged=merged)


def merge_square(c: Cycle, y: Square) -> Cycle:
    """Merge one exterior square into the cycle through their shared edges."""
    if y in interior_squares(c):
        raise ValueError("square interior to cycle")
    sq = square_cycle(y)
    if not (sq.edge_set & c.edge_set):
        raise ValueError("detached square")
    return merge_cycles(sq, c)
