"""Pure-Python fallback for the flood-fill and labelling kernels.

Semantics match ``latticedual._kernels.speed`` exactly; the compiled module is
simply faster.  Cells of a ``w`` x ``h`` box are indexed ``j * w + i`` for
column ``i`` and row ``j``.
"""

from __future__ import annotations


def flood_exterior(w: int, h: int, vwall: bytearray, hwall: bytearray) -> bytearray:
    """Flood the box from its border, treating walls as impassable.

    ``vwall[j*(w+1)+i]`` blocks movement between cells ``(i-1, j)`` and
    ``(i, j)``; ``hwall[j*w+i]`` blocks movement between ``(i, j-1)`` and
    ``(i, j)``.  The outer rim of the box must be wall-free (callers expand
    the bounding box by one ring).  Returns one byte per cell, 1 = reached.
    """
    reached = bytearray(w * h)
    stack = [0]
    reached[0] = 1
    vw = w + 1
    while stack:
        k = stack.pop()
        j, i = divmod(k, w)
        if i > 0 and not vwall[j * vw + i] and not reached[k - 1]:
            reached[k - 1] = 1
            stack.append(k - 1)
        if i < w - 1 and not vwall[j * vw + i + 1] and not reached[k + 1]:
            reached[k + 1] = 1
            stack.append(k + 1)
        if j > 0 and not hwall[j * w + i] and not reached[k - w]:
            reached[k - w] = 1
            stack.append(k - w)
        if j < h - 1 and not hwall[(j + 1) * w + i] and not reached[k + w]:
            reached[k + w] = 1
            stack.append(k + w)
    return reached


def flood_vacant(w: int, h: int, occ: bytearray) -> bytearray:
    """Flood vacant (``occ == 0``) cells plus-adjacently from the border.

    The rim must be vacant.  Returns 1 for every vacant cell connected to the
    border, 0 for occupied cells and enclosed vacant pockets.
    """
    reached = bytearray(w * h)
    stack = [0]
    reached[0] = 1
    while stack:
        k = stack.pop()
        j, i = divmod(k, w)
        if i > 0 and not reached[k - 1] and not occ[k - 1]:
            reached[k - 1] = 1
            stack.append(k - 1)
        if i < w - 1 and not reached[k + 1] and not occ[k + 1]:
            reached[k + 1] = 1
            stack.append(k + 1)
        if j > 0 and not reached[k - w] and not occ[k - w]:
            reached[k - w] = 1
            stack.append(k - w)
        if j < h - 1 and not reached[k + w] and not occ[k + w]:
            reached[k + w] = 1
            stack.append(k + w)
    return reached


def label_component(w: int, h: int, occ: bytearray, seed: int, star: bool) -> bytearray:
    """Mark the occupied component of ``seed`` under plus or star adjacency."""
    if not occ[seed]:
        raise ValueError("seed vacant")
    out = bytearray(w * h)
    out[seed] = 1
    stack = [seed]
    while stack:
        k = stack.pop()
        j, i = divmod(k, w)
        i0 = i - 1 if i > 0 else i
        i1 = i + 1 if i < w - 1 else i
        j0 = j - 1 if j > 0 else j
        j1 = j + 1 if j < h - 1 else j
        for jj in range(j0, j1 + 1):
            base = jj * w
            for ii in range(i0, i1 + 1):
                if not star and ii != i and jj != j:
                    continue
                n = base + ii
                if occ[n] and not out[n]:
                    out[n] = 1
                    stack.append(n)
    return out
