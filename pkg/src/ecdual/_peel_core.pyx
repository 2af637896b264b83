# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled peeling kernel; mirrors _peel_py.peel_csr exactly, including
the operation counter, so the two are interchangeable and comparable."""

import numpy as np


def peel_csr(long n, long[::1] indptr, long[::1] nbr, long[::1] col):
    iter_np = np.zeros(n, dtype=np.int64)
    cls_np = np.full(n, -1, dtype=np.int64)
    bpar_np = np.full(n, -1, dtype=np.int64)
    rpar_np = np.full(n, -1, dtype=np.int64)
    bcnt_np = np.zeros(n, dtype=np.int64)
    rcnt_np = np.zeros(n, dtype=np.int64)
    queued_np = np.ones(n, dtype=np.int64)
    cand_np = np.arange(n, dtype=np.int64)
    buf_np = np.empty(n, dtype=np.int64)
    front_np = np.empty(n, dtype=np.int64)

    cdef long[::1] iter_of = iter_np
    cdef long[::1] cls_of = cls_np
    cdef long[::1] blue_parent = bpar_np
    cdef long[::1] red_parent = rpar_np
    cdef long[::1] bcnt = bcnt_np
    cdef long[::1] rcnt = rcnt_np
    cdef long[::1] queued = queued_np
    cdef long[::1] cand = cand_np
    cdef long[::1] nxt = buf_np
    cdef long[::1] frontier = front_np

    cdef long v, u, idx, b, r, fi
    cdef long cand_len = n, nxt_len, front_len
    cdef long it = 0
    cdef long ops = 0

    for v in range(n):
        for idx in range(indptr[v], indptr[v + 1]):
            if col[idx] == 0:
                bcnt[v] += 1
            else:
                rcnt[v] += 1

    while cand_len > 0:
        it += 1
        front_len = 0
        for fi in range(cand_len):
            v = cand[fi]
            queued[v] = 0
            ops += 1
            b = bcnt[v]
            r = rcnt[v]
            if b > 0 and r > 0:
                continue
            iter_of[v] = it
            if b == 0 and r == 0:
                cls_of[v] = 2
            elif b > 0:
                cls_of[v] = 0
            else:
                cls_of[v] = 1
            frontier[front_len] = v
            front_len += 1
        if front_len == 0:
            it -= 1
            break
        nxt_len = 0
        for fi in range(front_len):
            u = frontier[fi]
            for idx in range(indptr[u], indptr[u + 1]):
                ops += 1
                v = nbr[idx]
                if iter_of[v] != 0:
                    continue
                if col[idx] == 0:
                    bcnt[v] -= 1
                    blue_parent[v] = u
                else:
                    rcnt[v] -= 1
                    red_parent[v] = u
                if queued[v] == 0:
                    queued[v] = 1
                    nxt[nxt_len] = v
                    nxt_len += 1
        cand, nxt = nxt, cand
        cand_len = nxt_len

    return (
        iter_np.tolist(),
        cls_np.tolist(),
        bpar_np.tolist(),
        rpar_np.tolist(),
        it,
        ops,
    )
