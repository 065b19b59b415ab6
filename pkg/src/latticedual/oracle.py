"""Independent brute-force verifiers and exhaustive/randomized harnesses.

Everything here re-derives results along a second code path: ray casting
instead of flood fill, exhaustive subpath enumeration instead of bridge
folding, and full occupancy enumeration or Monte Carlo sampling driving the
whole pipeline plus every theorem check.  Failures are reported as grid-text
reproduction strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .boundary import (
    OutermostBoundary,
    trace_outermost,
    verify_outermost_properties,
)
from .components import (
    component_of,
    contains_cycle,
    is_finite,
    vacant_graph,
)
from .cycles import BridgeDecomposition, Cycle, _split_at, interior_squares
from .duality import (
    dual_fence,
    extract_scycle,
    verify_interior_plus_connected,
    verify_scycle_boundary,
    verify_theorem5,
)
from .lattice import (
    Corner,
    Edge,
    GridConfig,
    Square,
    edge_cosquares,
    square_boundary,
)
from .rng import SplitMix64, substream


@lru_cache(maxsize=1 << 12)
def _crossing_rows(c: Cycle) -> dict[int, list[int]]:
    """Vertical-edge abscissas bucketed by the one ray height each crosses.

    A vertical edge spanning doubled heights [w, w+2] crosses exactly the
    horizontal ray at even height w+1.
    """
    rows: dict[int, list[int]] = {}
    for (u1, v1), (u2, v2) in c.edges:
        if u1 == u2:
            rows.setdefault(min(v1, v2) + 1, []).append(u1)
    return rows


def ray_cast_interior(c: Cycle, s: Square) -> bool:
    """Second interior oracle: parity of ray crossings against vertical edges.

    The horizontal ray starts at the square centre (even doubled coordinates)
    so it can never pass through a corner (odd coordinates): the crossing
    count is exact.
    """
    x2 = 2 * s[0]
    count = 0
    for u in _crossing_rows(c).get(2 * s[1], ()):
        if u > x2:
            count += 1
    return count % 2 == 1


def interior_oracle_agrees(c: Cycle) -> bool:
    """Ray casting and flood fill must agree on every square near the cycle."""
    inside = interior_squares(c)
    us = [u for u, _ in c.corners]
    vs = [v for _, v in c.corners]
    for x in range((min(us) - 1) // 2 - 1, (max(us) + 1) // 2 + 2):
        for y in range((min(vs) - 1) // 2 - 1, (max(vs) + 1) // 2 + 2):
            if ray_cast_interior(c, (x, y)) != ((x, y) in inside):
                return False
    return True


def brute_force_decomposition(c: Cycle, d: Cycle) -> BridgeDecomposition:
    """Exhaustive counterpart of ``bridge_decomposition``.

    Tries every pair of subpaths (one of d, one of c) joining every pair of
    shared corners, keeps the pairs forming a valid cycle that encloses both
    interiors, and insists exactly one survives.
    """
    c_int = interior_squares(c)
    d_int = interior_squares(d)
    if not c_int.isdisjoint(d_int):
        raise ValueError("interiors intersect")
    shared = sorted(c.vertex_set & d.vertex_set)
    if len(shared) < 2:
        raise ValueError("not mergeable")
    winners = []
    for i in range(len(shared)):
        for j in range(i + 1, len(shared)):
            a, b = shared[i], shared[j]
            for pd in _split_at(d, a, b):
                pd_edges = pd.edge_set
                for pc in _split_at(c, a, b):
                    if pd_edges & pc.edge_set:
                        continue
                    try:
                        cyc = Cycle.from_edges(pd.edges + pc.edges)
                    except ValueError:
                        continue
                    ci = interior_squares(cyc)
                    if c_int <= ci and d_int <= ci:
                        winners.append(BridgeDecomposition(pd, pc, cyc))
    if len(winners) != 1:
        raise ValueError("uniqueness violated")
    return winners[0]


def enumerate_simple_cycles(edges: Iterable[Edge]) -> list[Cycle]:
    """All simple cycles of a small edge graph (anchored DFS, both
    directions deduplicated).  Intended for component edge graphs that fit a
    3x3 square box."""
    adj: dict[Corner, list[Corner]] = {}
    for p, q in set(edges):
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)
    for v in adj:
        adj[v].sort()
    out: list[Cycle] = []

    def dfs(root: Corner, v: Corner, path: list[Corner], onpath: set[Corner]) -> None:
        for w in adj[v]:
            if w == root and len(path) >= 4 and path[1] < path[-1]:
                out.append(Cycle.from_walk(tuple(path)))
            elif w > root and w not in onpath:
                path.append(w)
                onpath.add(w)
                dfs(root, w, path, onpath)
                onpath.discard(w)
                path.pop()

    for root in sorted(adj):
        dfs(root, root, [root], {root})
    return out


def check_outdef_direct(squares: frozenset[Square], b: OutermostBoundary) -> list[str]:
    """Definition-level outermost-boundary check by exhausting all cycles.

    For every edge of the component's edge graph, recompute from scratch
    whether every cycle either contains it or leaves it in the exterior, and
    compare with membership in the traced boundary.
    """
    g0_edges = {e for s in squares for e in square_boundary(s)}
    cycles = enumerate_simple_cycles(g0_edges)
    interiors = [interior_squares(cy) for cy in cycles]
    traced = b.edge_set()
    failures = []
    for e in sorted(g0_edges):
        outermost = True
        for cy, inner in zip(cycles, interiors):
            if e in cy.edge_set:
                continue
            if edge_cosquares(e)[0] in inner:
                outermost = False
                break
        if outermost != (e in traced):
            failures.append(f"outdef mismatch on edge {e}")
    return failures


@dataclass(frozen=True)
class EnumSpec:
    """Exhaustive occupancy enumeration over a small block of free squares.

    The block is the ``width`` x ``height`` rectangle anchored at
    ``block_origin``; the origin square (forced occupied) is excluded from
    the free squares when the block covers it.  ``margin`` rings of forced
    vacancy surround the block.
    """

    width: int
    height: int
    forced_occupied: frozenset[Square] = frozenset()
    margin: int = 3
    block_origin: Square = (0, 0)

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1 or self.margin < 0:
            raise ValueError("bad enumeration spec")
        if self.width * self.height - len(self.forced_occupied) > 20:
            raise ValueError("enumeration bound exceeded")

    def block_squares(self) -> list[Square]:
        bx, by = self.block_origin
        return [
            (x, y)
            for x in range(bx, bx + self.width)
            for y in range(by, by + self.height)
        ]

    def window(self) -> tuple[int, int, int, int]:
        xs = [x for x, _ in self.block_squares()] + [0]
        ys = [y for _, y in self.block_squares()] + [0]
        m = self.margin
        return (min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m)


@dataclass(frozen=True)
class McSpec:
    """Monte Carlo sampling spec: i.i.d. occupancy at probability p."""

    p: float
    size: int
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must be in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.size < 1:
            raise ValueError("size must be at least 1")

    def window(self) -> tuple[int, int, int, int]:
        half = self.size // 2
        return (-half, -half, self.size - 1 - half, self.size - 1 - half)


@dataclass
class EnumResult:
    configs: int
    failures: list[tuple[str, list[str]]]  # (grid text, failure descriptions)


@dataclass
class McStats:
    trials: int
    applicable: int
    finite: int
    failures: list[tuple[str, list[str]]]

    @property
    def finite_fraction(self) -> float:
        return self.finite / self.trials if self.trials else 0.0


class CheckEngine:
    """Runs the full theorem battery on one grid, memoized by component shape.

    Every duality-side result is a function of the origin's plus component
    alone (its vacant neighbourhood is forced by maximality), and every
    boundary-side result a function of the star component, so both check
    bundles are cached on the component square set.
    """

    def __init__(self, outdef_box: int = 3):
        self.outdef_box = outdef_box
        self._plus: dict[frozenset[Square], list[str]] = {}
        self._star: dict[frozenset[Square], list[str]] = {}

    def applicable(self, grid: GridConfig) -> tuple[bool, str]:
        comp = component_of(grid, grid.origin, "plus")
        x0, y0, x1, y1 = grid.window
        bx0, by0, bx1, by1 = comp.bbox()
        if not (
            bx0 >= x0 + 2 and by0 >= y0 + 2 and bx1 <= x1 - 2 and by1 <= y1 - 2
        ):
            return False, "window too tight"
        if not is_finite(grid, comp):
            return False, "component not finite"
        return True, ""

    def run(self, grid: GridConfig) -> tuple[bool, list[str]]:
        """(applicable, failures).  Inapplicable grids return the reason."""
        ok, reason = self.applicable(grid)
        if not ok:
            return False, [reason]
        plus = component_of(grid, grid.origin, "plus")
        star = component_of(grid, grid.origin, "star")
        failures = list(self._plus_checks(plus.squares, grid.origin))
        failures += self._star_checks(star.squares, grid.origin)
        return True, failures

    def _plus_checks(self, squares: frozenset[Square], origin: Square) -> list[str]:
        cached = self._plus.get(squares)
        if cached is not None:
            return cached
        xs = [x for x, _ in squares]
        ys = [y for _, y in squares]
        window = (min(xs) - 3, min(ys) - 3, max(xs) + 3, max(ys) + 3)
        grid = GridConfig(window, squares, origin)
        failures: list[str] = []
        try:
            rep = dual_fence(grid)
        except ValueError as exc:
            failures = [f"dual_fence: {exc}"]
            self._plus[squares] = failures
            return failures
        verify_theorem5(rep)
        failures += rep.failures()
        if not verify_scycle_boundary(rep.h_out):
            failures.append("thm6: fence boundary is not a single cycle")
        if not verify_interior_plus_connected(rep.outer):
            failures.append("thm7 fails on the component outer cycle")
        if not verify_interior_plus_connected(rep.d_fin):
            failures.append("thm7 fails on the fence cycle")
        if not contains_cycle(vacant_graph(rep.h_out.squares)):
            failures.append("fence square graph contains no cycle")
        if not set(rep.h_out.squares) <= rep.lambdas.lambda_exterior:
            failures.append("fence squares leak outside the exterior fringe")
        if not rep.lambdas.lambda_exterior <= rep.lambdas.lambda_all:
            failures.append("exterior fringe not within vacant neighbours")
        canon = rep.h_out.canonical()
        for start in range(len(rep.d_fin.edges)):
            for rev in (False, True):
                alt = extract_scycle(
                    rep.d_fin, rep.lambdas.lambda_exterior, start, rev
                )
                if alt.canonical() != canon:
                    failures.append(
                        f"extraction differs at start {start} reverse {rev}"
                    )
                    break
            else:
                continue
            break
        for cyc, name in ((rep.outer, "outer"), (rep.d_fin, "fence")):
            if not interior_oracle_agrees(cyc):
                failures.append(f"interior oracles disagree on {name} cycle")
        self._plus[squares] = failures
        return failures

    def _star_checks(self, squares: frozenset[Square], origin: Square) -> list[str]:
        cached = self._star.get(squares)
        if cached is not None:
            return cached
        ob = trace_outermost(squares)
        failures = verify_outermost_properties(squares, ob)
        for cyc in ob.cycles:
            if not verify_interior_plus_connected(cyc):
                failures.append("thm7 fails on a star boundary cycle")
            if not interior_oracle_agrees(cyc):
                failures.append("interior oracles disagree on a star boundary cycle")
        xs = [x for x, _ in squares]
        ys = [y for _, y in squares]
        if max(xs) - min(xs) < self.outdef_box and max(ys) - min(ys) < self.outdef_box:
            failures += check_outdef_direct(squares, ob)
        self._star[squares] = failures
        return failures


def enumerate_window(
    spec: EnumSpec,
    engine: Optional[CheckEngine] = None,
    mask_range: Optional[tuple[int, int]] = None,
) -> EnumResult:
    """Run the full check battery on every occupancy assignment of the block.

    ``mask_range`` restricts to a half-open range of occupancy masks so that
    shards can run independently and be merged by union.
    """
    from .gridio import emit_grid

    engine = engine or CheckEngine()
    origin = (0, 0)
    free = [s for s in spec.block_squares() if s != origin and s not in spec.forced_occupied]
    base = frozenset({origin}) | spec.forced_occupied
    window = spec.window()
    total = 1 << len(free)
    lo, hi = mask_range if mask_range else (0, total)
    failures: list[tuple[str, list[str]]] = []
    for mask in range(lo, hi):
        occupied = base | {s for i, s in enumerate(free) if mask >> i & 1}
        grid = GridConfig(window, occupied, origin)
        ok, fails = engine.run(grid)
        if fails:
            failures.append((emit_grid(grid), fails))
    return EnumResult(configs=hi - lo, failures=failures)


def random_grid(spec: McSpec, trial: int) -> GridConfig:
    """The deterministic grid of one Monte Carlo trial (seed, trial) pair."""
    rng = substream(spec.seed, trial)
    x0, y0, x1, y1 = spec.window()
    occupied = {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if rng.bernoulli(spec.p)
    }
    occupied.add((0, 0))
    return GridConfig((x0, y0, x1, y1), frozenset(occupied))


def mc_duality(
    spec: McSpec,
    engine: Optional[CheckEngine] = None,
    trial_range: Optional[tuple[int, int]] = None,
) -> McStats:
    """Sample grids and assert the finiteness/duality equivalence per trial:
    the pipeline must succeed and verify exactly on margin-finite components."""
    from .gridio import emit_grid

    engine = engine or CheckEngine()
    lo, hi = trial_range if trial_range else (0, spec.trials)
    applicable = 0
    finite = 0
    failures: list[tuple[str, list[str]]] = []
    for trial in range(lo, hi):
        grid = random_grid(spec, trial)
        comp = component_of(grid, grid.origin, "plus")
        if is_finite(grid, comp):
            finite += 1
        ok, fails = engine.run(grid)
        if ok:
            applicable += 1
            if fails:
                failures.append((emit_grid(grid), fails))
        else:
            try:
                dual_fence(grid)
                failures.append(
                    (emit_grid(grid), ["dual_fence succeeded on inapplicable grid"])
                )
            except ValueError:
                pass
    return McStats(hi - lo, applicable, finite, failures)


def grow_polyomino(rng: SplitMix64, seed_square: Square, n: int,
                   forbidden: frozenset[Square] = frozenset()) -> frozenset[Square]:
    """Random plus-connected polyomino of n squares avoiding a forbidden set."""
    cells = {seed_square}
    frontier = sorted(
        nb for nb in _plus_nbrs(seed_square) if nb not in forbidden
    )
    while len(cells) < n and frontier:
        pick = frontier.pop(rng.randrange(len(frontier)))
        if pick in cells:
            continue
        cells.add(pick)
        for nb in _plus_nbrs(pick):
            if nb not in cells and nb not in forbidden:
                frontier.append(nb)
        frontier.sort()
    return frozenset(cells)


def _plus_nbrs(s: Square) -> list[Square]:
    x, y = s
    return [(x - 1, y), (x, y - 1), (x, y + 1), (x + 1, y)]


def grow_star_polyomino(rng: SplitMix64, seed_square: Square, n: int) -> frozenset[Square]:
    """Random star-connected square set: attach corner- or edge-neighbours."""
    cells = {seed_square}
    while len(cells) < n:
        anchors = sorted(cells)
        x, y = anchors[rng.randrange(len(anchors))]
        nbrs = [
            (x + dx, y + dy)
            for dx in (-1, 0, 1)
            for dy in (-1, 0, 1)
            if (dx, dy) != (0, 0)
        ]
        cells.add(nbrs[rng.randrange(8)])
    return frozenset(cells)


def random_disjoint_cycle_pair(rng: SplitMix64) -> Optional[tuple[Cycle, Cycle]]:
    """A random pair of cycles with disjoint interiors sharing >= 2 corners.

    Draws two adjacent-but-disjoint polyominoes and takes their outer
    contours; returns None when the draw does not qualify.
    """
    a = grow_polyomino(rng, (0, 0), 2 + rng.randrange(6))
    shell = sorted({nb for s in a for nb in _plus_nbrs(s)} - set(a))
    seed_b = shell[rng.randrange(len(shell))]
    b = grow_polyomino(rng, seed_b, 1 + rng.randrange(6), forbidden=a)
    ca = trace_outermost(a).cycles
    cb = trace_outermost(b).cycles
    if len(ca) != 1 or len(cb) != 1:
        return None
    c, d = ca[0], cb[0]
    if not interior_squares(c).isdisjoint(interior_squares(d)):
        return None
    if len(c.vertex_set & d.vertex_set) < 2:
        return None
    return c, d
