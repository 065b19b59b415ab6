"""The vacant star-connected fence around a finite plus component.

``dual_fence`` runs the constructive pipeline: take the outermost cycle of
the origin's plus component, iteratively merge every exterior vacant square
that shares an edge with it, and read the surrounding star-connected cycle of
vacant squares off the final cycle edge by edge.  The verifiers re-check the
advertised properties of the results through independent constructions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .boundary import trace_outermost
from .components import Component, LambdaSets, component_of, is_finite, lambda_sets
from .cycles import Cycle, interior_squares, merge_square
from .lattice import GridConfig, Square, edge_cosquares, square_boundary, star_adjacent
from .rng import SplitMix64


@dataclass(frozen=True)
class SCycle:
    """A cyclic sequence of at least three distinct, consecutively star-adjacent squares."""

    squares: tuple[Square, ...]

    def __post_init__(self) -> None:
        sq = self.squares
        if len(sq) < 3:
            raise ValueError("S-cycle needs at least three squares")
        if len(set(sq)) != len(sq):
            raise ValueError("S-cycle squares must be distinct")
        for i, a in enumerate(sq):
            if not star_adjacent(a, sq[(i + 1) % len(sq)]):
                raise ValueError("consecutive S-cycle squares not star adjacent")

    def __len__(self) -> int:
        return len(self.squares)

    def canonical(self) -> tuple[Square, ...]:
        """Least rotation over both directions; equal iff same cyclic sequence."""
        best = None
        for seq in (self.squares, tuple(reversed(self.squares))):
            n = len(seq)
            for k in range(n):
                rot = seq[k:] + seq[:k]
                if best is None or rot < best:
                    best = rot
        assert best is not None
        return best


@dataclass
class Verdict:
    ok: bool
    detail: str = ""


@dataclass
class DualityReport:
    component: Component
    outer: Cycle
    lambdas: LambdaSets
    d_fin: Cycle
    h_out: SCycle
    checks: dict[str, Verdict] = field(default_factory=dict)

    @property
    def partial_h(self) -> Cycle:
        """The outermost boundary of the fence; identical to ``d_fin``."""
        return self.d_fin

    def all_ok(self) -> bool:
        return all(v.ok for v in self.checks.values())

    def failures(self) -> list[str]:
        return [f"{k}: {v.detail}" for k, v in self.checks.items() if not v.ok]


def _check_margin(grid: GridConfig, comp: Component) -> None:
    """The component's bounding box must stay two rings inside the window."""
    x0, y0, x1, y1 = grid.window
    bx0, by0, bx1, by1 = comp.bbox()
    if not (bx0 >= x0 + 2 and by0 >= y0 + 2 and bx1 <= x1 - 2 and by1 <= y1 - 2):
        raise ValueError("window too tight")
    if not is_finite(grid, comp):
        raise ValueError("component not finite")


def outer_cycle_and_fringe(comp: Component) -> tuple[Cycle, list[Square]]:
    """The single outermost cycle of a plus component and, per edge, the
    vacant square on its exterior side (in canonical edge order)."""
    ob = trace_outermost(comp.squares)
    if len(ob.cycles) != 1:
        raise ValueError("duality violated: plus component boundary is not a single cycle")
    outer = ob.cycles[0]
    inner = interior_squares(outer)
    fringe = []
    for e in outer.edges:
        a, b = edge_cosquares(e)
        fringe.append(b if a in inner else a)
    return outer, fringe


def merge_all(
    outer: Cycle,
    fringe: list[Square],
    pick: Callable[[list[int]], int] | None = None,
) -> Cycle:
    """The iterative fence construction: merge exterior fringe squares until
    no edge of the original cycle remains on the current one.

    ``pick`` chooses which eligible fringe index to merge next (least index
    by default); the final cycle does not depend on the choice.
    """
    current = outer
    remaining = len(outer.edges) + 1
    while True:
        cur_edges = current.edge_set
        cur_int = interior_squares(current)
        eligible = []
        for j, e in enumerate(outer.edges):
            on_cycle = e in cur_edges
            if on_cycle != (fringe[j] not in cur_int):
                raise ValueError(
                    "duality violated: edge/fringe exterior correspondence broken"
                )
            if on_cycle:
                eligible.append(j)
        if not eligible:
            return current
        if len(eligible) >= remaining:
            raise ValueError("duality violated: merge made no progress")
        remaining = len(eligible)
        j = eligible[0] if pick is None else eligible[pick(eligible)]
        current = merge_square(current, fringe[j])


def extract_scycle(
    d_fin: Cycle, lam_ext: frozenset[Square], start: int = 0, reverse: bool = False
) -> SCycle:
    """Walk the fence cycle edge by edge and collect the vacant square owning
    each edge, collapsing consecutive (and wraparound) repeats."""
    interior = interior_squares(d_fin)
    edges = d_fin.edges
    n = len(edges)
    order = range(start, start + n)
    seq: list[Square] = []
    for k in order:
        e = edges[(n - (k % n) - 1)] if reverse else edges[k % n]
        a, b = edge_cosquares(e)
        z = a if a in interior else b
        if z not in lam_ext:
            raise ValueError("duality violated: fence edge not owned by a fringe square")
        if not seq or (z != seq[-1]):
            seq.append(z)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    try:
        return SCycle(tuple(seq))
    except ValueError as exc:
        raise ValueError(f"duality violated: {exc}") from exc


def dual_fence(grid: GridConfig, pick: Callable[[list[int]], int] | None = None) -> DualityReport:
    """Run the full pipeline on the origin's plus component."""
    comp = component_of(grid, grid.origin, "plus")
    _check_margin(grid, comp)
    outer, fringe = outer_cycle_and_fringe(comp)
    lambdas = lambda_sets(grid, comp, outer)
    d_fin = merge_all(outer, fringe, pick)
    h_out = extract_scycle(d_fin, lambdas.lambda_exterior)

    checks: dict[str, Verdict] = {}
    d_int = interior_squares(d_fin)
    lam_edges = set()
    for z in lambdas.lambda_exterior:
        lam_edges.update(square_boundary(z))
    bad = [e for e in d_fin.edges if e not in lam_edges]
    checks["dfin_edges_from_fringe"] = Verdict(not bad, f"foreign edges {bad[:3]}")
    on = [e for e in outer.edges if e in d_fin.edge_set]
    not_inside = [
        e
        for e in outer.edges
        if e not in d_fin.edge_set and not all(s in d_int for s in edge_cosquares(e))
    ]
    checks["outer_edges_strictly_inside_dfin"] = Verdict(
        not on and not_inside == [], f"on fence {on[:3]}, outside {not_inside[:3]}"
    )
    missing = [
        s for s in comp.squares | lambdas.lambda_exterior if s not in d_int
    ]
    checks["comp_and_fringe_inside_dfin"] = Verdict(not missing, f"outside {missing[:3]}")
    return DualityReport(comp, outer, lambdas, d_fin, h_out, checks)


def verify_theorem5(report: DualityReport, seed: int = 0x5EED) -> dict[str, Verdict]:
    """Re-check the three advertised fence properties plus uniqueness.

    Uniqueness is exercised by rerunning the merge under three permuted
    eligible orders (greatest index first and two seeded random choices) and
    demanding the identical final cycle every time.
    """
    out: dict[str, Verdict] = {}
    lam = report.lambdas
    hs = set(report.h_out.squares)

    not_lam = [s for s in report.h_out.squares if s not in lam.lambda_all]
    out["thm5_i_fence_in_lambda"] = Verdict(not not_lam, f"not vacant neighbours {not_lam[:3]}")

    ob = trace_outermost(frozenset(hs))
    single = len(ob.cycles) == 1 and ob.cycles[0] == report.d_fin
    no_edge = [
        s
        for s in hs
        if not any(e in report.d_fin.edge_set for e in square_boundary(s))
    ]
    out["thm5_ii_single_cycle_with_edges"] = Verdict(
        single and not no_edge,
        f"cycles={len(ob.cycles)}, squares without fence edge {no_edge[:3]}",
    )

    d_int = interior_squares(report.d_fin)
    outside = [
        s for s in report.component.squares | lam.lambda_all if s not in d_int
    ]
    out["thm5_iii_all_inside"] = Verdict(not outside, f"outside {outside[:3]}")

    outer, fringe = outer_cycle_and_fringe(report.component)
    try:
        picks = [lambda el: len(el) - 1]
        for sub in (1, 2):
            rng = SplitMix64(seed + sub)
            picks.append(lambda el, r=rng: r.randrange(len(el)))
        same = all(merge_all(outer, fringe, pick=p) == report.d_fin for p in picks)
        out["dfin_unique_under_merge_order"] = Verdict(same, "permuted merge order changed the fence")
    except ValueError as exc:
        out["dfin_unique_under_merge_order"] = Verdict(False, str(exc))
    report.checks.update(out)
    return out


def verify_scycle_boundary(s: SCycle) -> bool:
    """Whether the squares of the S-cycle have a single-cycle outermost boundary."""
    return len(trace_outermost(frozenset(s.squares)).cycles) == 1


def verify_interior_plus_connected(c: Cycle) -> bool:
    """Whether the enclosed squares form one plus component whose boundary is c.

    The connectivity check is a plain BFS kept separate from the grid
    labelling kernels.
    """
    inside = interior_squares(c)
    if not inside:
        return False
    seen = {next(iter(sorted(inside)))}
    stack = list(seen)
    while stack:
        x, y = stack.pop()
        for n in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if n in inside and n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(inside):
        return False
    ob = trace_outermost(inside)
    return len(ob.cycles) == 1 and ob.cycles[0] == c
