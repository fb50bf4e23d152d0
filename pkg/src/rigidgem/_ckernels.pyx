# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same contracts."""

from libc.stdlib cimport malloc, free


def residue_labels(const int[:] flat, int n, int p, colours):
    cdef int stride = p + 1
    cdef int k = len(colours)
    cdef int *offs = <int *> malloc(max(k, 1) * sizeof(int))
    cdef int *stack = <int *> malloc(stride * sizeof(int))
    cdef int *lab = <int *> malloc(stride * sizeof(int))
    cdef int i, s, v, w, top, count = 0
    if offs == NULL or stack == NULL or lab == NULL:
        free(offs); free(stack); free(lab)
        raise MemoryError()
    try:
        for i in range(k):
            offs[i] = <int> colours[i] * stride
        for i in range(stride):
            lab[i] = -1
        for s in range(1, stride):
            if lab[s] >= 0:
                continue
            lab[s] = count
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                for i in range(k):
                    w = flat[offs[i] + v]
                    if lab[w] < 0:
                        lab[w] = count
                        stack[top] = w
                        top += 1
            count += 1
        return [lab[i] for i in range(stride)], count
    finally:
        free(offs); free(stack); free(lab)


def canonical_sequence(const int[:] flat, int n, int p, perms):
    cdef int stride = p + 1
    cdef int ncol = n + 1
    cdef int total = p * ncol
    cdef int *offs = <int *> malloc(ncol * sizeof(int))
    cdef int *label = <int *> malloc(stride * sizeof(int))
    cdef int *order = <int *> malloc((stride + 1) * sizeof(int))
    cdef int *seq = <int *> malloc(total * sizeof(int))
    cdef int *best = <int *> malloc(total * sizeof(int))
    cdef int have_best = 0
    cdef int root, i, j, v, w, lw, nxt, pos, state, worse
    if offs == NULL or label == NULL or order == NULL or seq == NULL or best == NULL:
        free(offs); free(label); free(order); free(seq); free(best)
        raise MemoryError()
    try:
        for perm in perms:
            for j in range(ncol):
                offs[j] = <int> perm[j] * stride
            for root in range(1, stride):
                for i in range(stride):
                    label[i] = 0
                    order[i] = 0
                order[stride] = 0
                label[root] = 1
                order[1] = root
                nxt = 2
                state = 0 if have_best else 1
                pos = 0
                worse = 0
                for i in range(1, stride):
                    v = order[i]
                    if v == 0:
                        raise ValueError("graph is not connected")
                    for j in range(ncol):
                        w = flat[offs[j] + v]
                        lw = label[w]
                        if lw == 0:
                            lw = nxt
                            label[w] = nxt
                            order[nxt] = w
                            nxt += 1
                        if state == 0:
                            if lw > best[pos]:
                                worse = 1
                                break
                            if lw < best[pos]:
                                state = 1
                        seq[pos] = lw
                        pos += 1
                    if worse:
                        break
                if not worse and state == 1:
                    for i in range(total):
                        best[i] = seq[i]
                    have_best = 1
        return tuple([best[i] for i in range(total)])
    finally:
        free(offs); free(label); free(order); free(seq); free(best)
