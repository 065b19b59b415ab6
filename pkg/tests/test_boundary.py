import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticedual.boundary import (
    boundary_edges,
    cycle_graph,
    is_acyclic,
    outermost_cycle_of,
    trace_outermost,
    verify_outermost_properties,
)
from latticedual.components import component_of
from latticedual.cycles import interior_squares, square_cycle
from latticedual.rng import SplitMix64

from conftest import grid_around, region_contour


def random_star_component(seed, size):
    """Random star-connected square set grown corner- and edge-wise."""
    rng = SplitMix64(seed)
    cells = {(0, 0)}
    while len(cells) < size:
        anchors = sorted(cells)
        x, y = anchors[rng.randrange(len(anchors))]
        nbrs = [(x + dx, y + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)]
        cells.add(nbrs[rng.randrange(len(nbrs))])
    return frozenset(cells)


def test_single_square():
    ob = trace_outermost(frozenset({(0, 0)}))
    assert len(ob.cycles) == 1
    assert ob.cycles[0] == square_cycle((0, 0))
    assert ob.pinch_vertices == {}


def test_diagonal_pair_two_cycles_sharing_pinch():
    ob = trace_outermost(frozenset({(0, 0), (1, 1)}))
    assert len(ob.cycles) == 2
    assert {interior_squares(c) == frozenset({(0, 0)}) for c in ob.cycles} == {True, False}
    assert ob.pinch_vertices == {(1, 1): frozenset({0, 1})}


def test_plus_component_single_cycle():
    ob = trace_outermost(frozenset({(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)}))
    assert len(ob.cycles) == 1


def test_empty_component_rejected():
    with pytest.raises(ValueError, match="empty component"):
        trace_outermost(frozenset())


def test_outermost_cycle_of():
    g = grid_around({(0, 0), (1, 1)})
    comp = component_of(g, (0, 0), "star")
    c = outermost_cycle_of(comp, (1, 1))
    assert interior_squares(c) == {(1, 1)}
    assert outermost_cycle_of(comp, (0, 0)) != c
    with pytest.raises(ValueError, match="not in component"):
        outermost_cycle_of(comp, (5, 5))


def test_boundary_edges_counts():
    g = grid_around({(0, 0)})
    comp = component_of(g, (0, 0), "plus")
    assert len(boundary_edges(g, comp)) == 4

    g = grid_around({(0, 0), (1, 0)})
    comp = component_of(g, (0, 0), "plus")
    assert len(boundary_edges(g, comp)) == 6

    ring = {(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)} - {(0, 0)}
    g = grid_around(ring, origin=(1, 0))
    comp = component_of(g, (1, 0), "plus")
    assert len(boundary_edges(g, comp)) == 16  # 12 outer + 4 around the hole


def test_hole_edges_not_in_outermost_boundary():
    ring = frozenset({(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)} - {(0, 0)})
    ob = trace_outermost(ring)
    assert len(ob.cycles) == 1
    assert len(ob.cycles[0].edges) == 12
    assert (0, 0) in interior_squares(ob.cycles[0])


def test_cycle_graph_paths():
    ob = trace_outermost(frozenset({(0, 0)}))
    cg = cycle_graph(ob)
    assert cg.vertices == (0,) and not cg.edges

    ob = trace_outermost(frozenset({(0, 0), (1, 1)}))
    cg = cycle_graph(ob)
    assert len(cg.edges) == 1
    assert is_acyclic(cg)

    staircase = trace_outermost(frozenset({(0, 0), (1, 1), (2, 2)}))
    cg = cycle_graph(staircase)
    assert len(staircase.cycles) == 3
    assert len(cg.edges) == 2
    assert is_acyclic(cg)


def test_diagonal_diamond_encloses_centre():
    # four squares pairwise touching corner to corner around a trapped cell
    diamond = frozenset({(0, 0), (1, 1), (2, 0), (1, -1)})
    ob = trace_outermost(diamond)
    assert len(ob.cycles) == 1
    inner = interior_squares(ob.cycles[0])
    assert (1, 0) in inner  # the trapped vacant cell is interior
    assert verify_outermost_properties(diamond, ob) == []


def test_verify_outermost_properties_on_examples():
    for squares in (
        {(0, 0)},
        {(0, 0), (1, 1)},
        {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 2), (2, 2)},
        {(0, 0), (1, 1), (0, 2), (-1, 1)},
    ):
        ob = trace_outermost(frozenset(squares))
        assert verify_outermost_properties(frozenset(squares), ob) == []


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=0, max_value=2**63 - 1),
    st.integers(min_value=1, max_value=12),
)
def test_outermost_properties_fuzz(seed, size):
    squares = random_star_component(seed, size)
    ob = trace_outermost(squares)
    assert verify_outermost_properties(squares, ob) == []


def test_component_contour_matches_region_contour():
    # hole-free edge-connected region: trace equals the union contour
    region = frozenset({(0, 0), (1, 0), (0, 1), (2, 0), (2, 1)})
    ob = trace_outermost(region)
    assert len(ob.cycles) == 1
    assert ob.cycles[0] == region_contour(region)


def test_outermost_cycle_dominates_every_enclosing_cycle():
    # For each member square, every cycle of the component's edge graph that
    # encloses it lies (edge-wise) on or inside the member's outermost cycle.
    from latticedual.lattice import edge_cosquares, square_boundary
    from latticedual.oracle import enumerate_simple_cycles

    shapes = (
        {(0, 0), (1, 1)},
        {(0, 0), (1, 0), (1, 1)},
        {(0, 0), (1, 0), (0, 1), (1, 1)},
    )
    for squares in shapes:
        comp = frozenset(squares)
        star = component_of(grid_around(comp), (0, 0), "star")
        all_cycles = enumerate_simple_cycles(
            {e for s in comp for e in square_boundary(s)}
        )
        for s in comp:
            dk = outermost_cycle_of(star, s)
            dk_inner = interior_squares(dk)
            for cyc in all_cycles:
                if s not in interior_squares(cyc):
                    continue
                for e in cyc.edges:
                    assert e in dk.edge_set or all(
                        q in dk_inner for q in edge_cosquares(e)
                    )
