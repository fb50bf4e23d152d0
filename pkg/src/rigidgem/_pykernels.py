"""Pure-Python versions of the hot kernels.

Both kernels take the flat adjacency layout used by :class:`rigidgem.gem.Gem`:
``flat[c * (p + 1) + v]`` is the ``c``-neighbour of vertex ``v`` (1-based,
slot 0 of every colour block is unused).
"""


def residue_labels(flat, n, p, colours):
    """Label the connected components of the subgraph spanned by ``colours``.

    Returns ``(labels, count)`` where ``labels[v]`` is the 0-based block index
    of vertex ``v`` (``labels[0] == -1``).  Blocks are numbered in order of
    their smallest vertex.
    """
    stride = p + 1
    offs = [c * stride for c in colours]
    labels = [-1] * stride
    count = 0
    for s in range(1, stride):
        if labels[s] >= 0:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            v = stack.pop()
            for off in offs:
                w = flat[off + v]
                if labels[w] < 0:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return labels, count


def canonical_sequence(flat, n, p, perms):
    """Lexicographically least rooted BFS numbering of a connected gem.

    ``perms`` lists colour orders: ``perm[k]`` is the original colour read in
    position ``k``.  For every order and every root the graph is numbered by
    breadth-first search visiting colours in that order, and the rows of the
    renumbered adjacency table are emitted.  Candidates are abandoned as soon
    as they exceed the current best prefix.
    """
    stride = p + 1
    best = None
    for perm in perms:
        offs = [c * stride for c in perm]
        for root in range(1, stride):
            label = [0] * stride
            order = [0] * (stride + 1)
            label[root] = 1
            order[1] = root
            nxt = 2
            seq = []
            # 0: equal to best so far, 1: already smaller (or no best yet)
            state = 1 if best is None else 0
            pos = 0
            worse = False
            for i in range(1, stride):
                v = order[i]
                if v == 0:
                    raise ValueError("graph is not connected")
                for off in offs:
                    w = flat[off + v]
                    lw = label[w]
                    if lw == 0:
                        lw = nxt
                        label[w] = nxt
                        order[nxt] = w
                        nxt += 1
                    if state == 0:
                        b = best[pos]
                        if lw > b:
                            worse = True
                            break
                        if lw < b:
                            state = 1
                    seq.append(lw)
                    pos += 1
                if worse:
                    break
            if not worse and state == 1:
                best = seq
    return tuple(best)
