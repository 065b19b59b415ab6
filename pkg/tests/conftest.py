import pytest

from latticedual import Cycle, GridConfig
from latticedual.lattice import square_boundary


def grid_around(occupied, pad=3, origin=(0, 0)):
    """Window = bounding box of the occupied set (plus origin) padded by `pad`."""
    xs = [x for x, _ in occupied] + [origin[0]]
    ys = [y for _, y in occupied] + [origin[1]]
    window = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    return GridConfig(window, frozenset(occupied), origin)


def region_contour(squares):
    """Contour of a hole-free edge-connected region: its non-shared edges."""
    edges = {}
    for s in squares:
        for e in square_boundary(s):
            edges[e] = edges.get(e, 0) + 1
    return Cycle.from_edges([e for e, n in edges.items() if n == 1])


@pytest.fixture
def fig2_cycles():
    """Concrete realization of the two-bridge figure: a solid cycle D (a
    vertical domino contour) and a crescent C hugging its left flank,
    touching D at the corners u=(-1,3) and s=(-1,-1).

    C's inner arc (u-x-s, 4 edges) and outer arc (u-y-s, 10 edges) are both
    bridges for D with the common base u-r-s = D's left side."""
    d = region_contour([(0, 0), (0, 1)])
    inner = [(-1, 3), (-3, 3), (-3, 1), (-3, -1), (-1, -1)]
    outer = [
        (-1, 3), (-1, 5), (-3, 5), (-5, 5), (-5, 3), (-5, 1),
        (-5, -1), (-5, -3), (-3, -3), (-1, -3), (-1, -1),
    ]
    c = Cycle.from_walk(inner[:-1] + list(reversed(outer))[:-1])
    return c, d
