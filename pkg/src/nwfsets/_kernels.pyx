# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled graph kernels; same contracts as _kernels_py."""
from libc.stdlib cimport malloc, free


cdef long* _to_c(seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def scc(indptr, indices):
    cdef Py_ssize_t n = len(indptr) - 1
    cdef Py_ssize_t m = len(indices)
    cdef long* ip = _to_c(indptr, n + 1)
    cdef long* ix = _to_c(indices, m)
    cdef long* index = <long*> malloc((n + 1) * sizeof(long))
    cdef long* low = <long*> malloc((n + 1) * sizeof(long))
    cdef long* comp = <long*> malloc((n + 1) * sizeof(long))
    cdef char* onstack = <char*> malloc(n + 1)
    cdef long* stack = <long*> malloc((n + 1) * sizeof(long))
    cdef long* wv = <long*> malloc((n + 1) * sizeof(long))
    cdef long* wi = <long*> malloc((n + 1) * sizeof(long))
    cdef long sp = 0, wp = 0, counter = 0, ncomp = 0
    cdef long root, v, i, w, u
    try:
        for v in range(n):
            index[v] = -1
            onstack[v] = 0
        for root in range(n):
            if index[root] != -1:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root; sp += 1
            onstack[root] = 1
            wv[wp] = root; wi[wp] = ip[root]; wp += 1
            while wp > 0:
                v = wv[wp - 1]
                i = wi[wp - 1]
                if i < ip[v + 1]:
                    wi[wp - 1] = i + 1
                    w = ix[i]
                    if index[w] == -1:
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w; sp += 1
                        onstack[w] = 1
                        wv[wp] = w; wi[wp] = ip[w]; wp += 1
                    elif onstack[w] and index[w] < low[v]:
                        low[v] = index[w]
                    continue
                wp -= 1
                if wp > 0:
                    u = wv[wp - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
        return [comp[v] for v in range(n)]
    finally:
        free(ip); free(ix); free(index); free(low); free(comp)
        free(onstack); free(stack); free(wv); free(wi)


def bisim_blocks(indptr, indices):
    cdef Py_ssize_t n = len(indptr) - 1
    cdef Py_ssize_t m = len(indices)
    if n == 0:
        return []
    cdef long* ip = _to_c(indptr, n + 1)
    cdef long* ix = _to_c(indices, m)
    cdef long* pcount = <long*> malloc((n + 1) * sizeof(long))
    cdef long* fill = <long*> malloc((n + 1) * sizeof(long))
    cdef long* pred = <long*> malloc((m + 1) * sizeof(long))
    cdef long* elems = <long*> malloc(n * sizeof(long))
    cdef long* pos = <long*> malloc(n * sizeof(long))
    cdef long* block = <long*> malloc(n * sizeof(long))
    # at most n blocks ever exist
    cdef long* start = <long*> malloc(n * sizeof(long))
    cdef long* end = <long*> malloc(n * sizeof(long))
    cdef long* marked = <long*> malloc(n * sizeof(long))
    cdef char* queued = <char*> malloc(n)
    cdef long* work = <long*> malloc(n * sizeof(long))
    cdef long* touched = <long*> malloc(n * sizeof(long))
    cdef long* splitter = <long*> malloc(n * sizeof(long))
    cdef long nblocks = 1, wp = 0, nt, ns
    cdef long b, y, i, j, x, bx, p, front, other, mk, nb, k
    try:
        for i in range(n + 1):
            pcount[i] = 0
        for i in range(m):
            pcount[ix[i] + 1] += 1
        for i in range(n):
            pcount[i + 1] += pcount[i]
        for i in range(n):
            fill[i] = pcount[i]
        for x in range(n):
            for i in range(ip[x], ip[x + 1]):
                y = ix[i]
                pred[fill[y]] = x
                fill[y] += 1
        for i in range(n):
            elems[i] = i
            pos[i] = i
            block[i] = 0
        start[0] = 0; end[0] = n; marked[0] = 0; queued[0] = 1
        work[0] = 0; wp = 1
        while wp > 0:
            wp -= 1
            b = work[wp]
            queued[b] = 0
            ns = end[b] - start[b]
            for k in range(ns):
                splitter[k] = elems[start[b] + k]
            nt = 0
            for k in range(ns):
                y = splitter[k]
                for i in range(pcount[y], pcount[y + 1]):
                    x = pred[i]
                    bx = block[x]
                    p = pos[x]
                    front = start[bx] + marked[bx]
                    if p < front:
                        continue
                    if marked[bx] == 0:
                        touched[nt] = bx; nt += 1
                    other = elems[front]
                    elems[front] = x; elems[p] = other
                    pos[x] = front; pos[other] = p
                    marked[bx] += 1
            for k in range(nt):
                bx = touched[k]
                mk = marked[bx]
                marked[bx] = 0
                if mk == end[bx] - start[bx]:
                    continue
                nb = nblocks
                nblocks += 1
                start[nb] = start[bx]
                end[nb] = start[bx] + mk
                marked[nb] = 0
                start[bx] += mk
                for j in range(start[nb], end[nb]):
                    block[elems[j]] = nb
                queued[nb] = 1
                work[wp] = nb; wp += 1
                if not queued[bx]:
                    queued[bx] = 1
                    work[wp] = bx; wp += 1
        return [block[i] for i in range(n)]
    finally:
        free(ip); free(ix); free(pcount); free(fill); free(pred)
        free(elems); free(pos); free(block); free(start); free(end)
        free(marked); free(queued); free(work); free(touched); free(splitter)


def subset_tuples(items):
    cdef Py_ssize_t k = len(items)
    cdef Py_ssize_t total = 1 << k
    cdef Py_ssize_t mask, low, bit
    cdef list out = [()] * total
    cdef tuple its = tuple(items)
    for mask in range(1, total):
        low = mask & -mask
        bit = 0
        while (low >> bit) != 1:
            bit += 1
        out[mask] = (its[bit],) + <tuple> out[mask ^ low]
    return out
