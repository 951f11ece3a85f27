"""Pure-Python graph kernels. Graphs are CSR pairs (indptr, indices) over nodes 0..n-1."""
from __future__ import annotations

from typing import Sequence


def scc(indptr: Sequence[int], indices: Sequence[int]) -> list[int]:
    """Component id per node (iterative Tarjan). Ids follow reverse topological order."""
    n = len(indptr) - 1
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    onstack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, indptr[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = True
        while work:
            v, i = work[-1]
            if i < indptr[v + 1]:
                work[-1] = (v, i + 1)
                w = indices[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = True
                    work.append((w, indptr[w]))
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def bisim_blocks(indptr: Sequence[int], indices: Sequence[int]) -> list[int]:
    """Coarsest partition stable under the successor relation (greatest bisimulation).

    Splitter-driven refinement: each block occupies a contiguous slice of
    ``elems``; splitting moves marked elements to the front of the slice.
    """
    n = len(indptr) - 1
    if n == 0:
        return []
    # predecessor CSR
    pcount = [0] * (n + 1)
    for w in indices:
        pcount[w + 1] += 1
    for i in range(n):
        pcount[i + 1] += pcount[i]
    pred = [0] * len(indices)
    fill = pcount[:-1]
    fill = list(fill)
    for v in range(n):
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            pred[fill[w]] = v
            fill[w] += 1

    elems = list(range(n))
    pos = list(range(n))
    block = [0] * n
    start = [0]
    end = [n]
    marked = [0]
    queued = [True]
    work = [0]
    while work:
        b = work.pop()
        queued[b] = False
        splitter = elems[start[b]:end[b]]
        touched: list[int] = []
        for y in splitter:
            for i in range(pcount[y], pcount[y + 1]):
                x = pred[i]
                bx = block[x]
                p = pos[x]
                front = start[bx] + marked[bx]
                if p < front:
                    continue  # already marked
                if marked[bx] == 0:
                    touched.append(bx)
                other = elems[front]
                elems[front], elems[p] = x, other
                pos[x], pos[other] = front, p
                marked[bx] += 1
        for bx in touched:
            m = marked[bx]
            marked[bx] = 0
            if m == end[bx] - start[bx]:
                continue
            nb = len(start)
            start.append(start[bx])
            end.append(start[bx] + m)
            marked.append(0)
            start[bx] += m
            for j in range(start[nb], end[nb]):
                block[elems[j]] = nb
            queued.append(True)
            work.append(nb)
            if not queued[bx]:
                queued[bx] = True
                work.append(bx)
    return block


def subset_tuples(items: Sequence[int]) -> list[tuple[int, ...]]:
    """All subsets of ``items`` as tuples preserving item order, indexed by bitmask."""
    k = len(items)
    out: list[tuple[int, ...]] = [()] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        bit = low.bit_length() - 1
        # extend the subset without its lowest bit: keeps item order
        out[mask] = (items[bit],) + out[mask ^ low]
    return out
