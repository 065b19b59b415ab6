# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; behaviour identical to ``latticedual._kernels.pure``."""

from libc.stdlib cimport free, malloc


def flood_exterior(int w, int h, vwall, hwall):
    cdef const unsigned char[::1] vw = vwall
    cdef const unsigned char[::1] hw = hwall
    out = bytearray(w * h)
    cdef unsigned char[::1] reached = out
    cdef int* stack = <int*> malloc(w * h * sizeof(int))
    if stack == NULL:
        raise MemoryError()
    cdef int top = 0, k, i, j, vrow = w + 1
    reached[0] = 1
    stack[top] = 0
    top += 1
    while top:
        top -= 1
        k = stack[top]
        j = k // w
        i = k - j * w
        if i > 0 and not vw[j * vrow + i] and not reached[k - 1]:
            reached[k - 1] = 1
            stack[top] = k - 1
            top += 1
        if i < w - 1 and not vw[j * vrow + i + 1] and not reached[k + 1]:
            reached[k + 1] = 1
            stack[top] = k + 1
            top += 1
        if j > 0 and not hw[j * w + i] and not reached[k - w]:
            reached[k - w] = 1
            stack[top] = k - w
            top += 1
        if j < h - 1 and not hw[(j + 1) * w + i] and not reached[k + w]:
            reached[k + w] = 1
            stack[top] = k + w
            top += 1
    free(stack)
    return out


def flood_vacant(int w, int h, occ):
    cdef const unsigned char[::1] oc = occ
    out = bytearray(w * h)
    cdef unsigned char[::1] reached = out
    cdef int* stack = <int*> malloc(w * h * sizeof(int))
    if stack == NULL:
        raise MemoryError()
    cdef int top = 0, k, i, j
    reached[0] = 1
    stack[top] = 0
    top += 1
    while top:
        top -= 1
        k = stack[top]
        j = k // w
        i = k - j * w
        if i > 0 and not reached[k - 1] and not oc[k - 1]:
            reached[k - 1] = 1
            stack[top] = k - 1
            top += 1
        if i < w - 1 and not reached[k + 1] and not oc[k + 1]:
            reached[k + 1] = 1
            stack[top] = k + 1
            top += 1
        if j > 0 and not reached[k - w] and not oc[k - w]:
            reached[k - w] = 1
            stack[top] = k - w
            top += 1
        if j < h - 1 and not reached[k + w] and not oc[k + w]:
            reached[k + w] = 1
            stack[top] = k + w
            top += 1
    free(stack)
    return out


def label_component(int w, int h, occ, int seed, bint star):
    cdef const unsigned char[::1] oc = occ
    if not oc[seed]:
        raise ValueError("seed vacant")
    out = bytearray(w * h)
    cdef unsigned char[::1] lab = out
    cdef int* stack = <int*> malloc(w * h * sizeof(int))
    if stack == NULL:
        raise MemoryError()
    cdef int top = 0, k, i, j, ii, jj, i0, i1, j0, j1, n
    lab[seed] = 1
    stack[top] = seed
    top += 1
    while top:
        top -= 1
        k = stack[top]
        j = k // w
        i = k - j * w
        i0 = i - 1 if i > 0 else i
        i1 = i + 1 if i < w - 1 else i
        j0 = j - 1 if j > 0 else j
        j1 = j + 1 if j < h - 1 else j
        for jj in range(j0, j1 + 1):
            for ii in range(i0, i1 + 1):
                if not star and ii != i and jj != j:
                    continue
                n = jj * w + ii
                if oc[n] and not lab[n]:
                    lab[n] = 1
                    stack[top] = n
                    top += 1
    free(stack)
    return out
