"""Pure-Python peeling kernel; import-time fallback for the compiled one.

Operates on a half-edge CSR built by peel._build_csr: each non-loop edge
appears in both endpoints' slices, a loop appears once.  Colour codes:
0 = blue, 1 = red.  The operation counter grows by one per vertex
classification attempt and one per half-edge scan, so both kernels
report identical counts.
"""
from __future__ import annotations


def peel_csr(n, indptr, nbr, col):
    indptr = indptr.tolist() if hasattr(indptr, "tolist") else list(indptr)
    nbr = nbr.tolist() if hasattr(nbr, "tolist") else list(nbr)
    col = col.tolist() if hasattr(col, "tolist") else list(col)

    bcnt = [0] * n
    rcnt = [0] * n
    for v in range(n):
        for idx in range(indptr[v], indptr[v + 1]):
            if col[idx] == 0:
                bcnt[v] += 1
            else:
                rcnt[v] += 1

    iter_of = [0] * n
    cls_of = [-1] * n  # 0 = blue-only, 1 = red-only, 2 = isolated
    blue_parent = [-1] * n
    red_parent = [-1] * n
    queued = [True] * n
    cand = list(range(n))
    ops = 0
    it = 0

    while cand:
        it += 1
        frontier = []
        for v in cand:
            queued[v] = False
            ops += 1
            b, r = bcnt[v], rcnt[v]
            if b > 0 and r > 0:
                continue
            iter_of[v] = it
            cls_of[v] = 2 if b == 0 and r == 0 else (0 if b > 0 else 1)
            frontier.append(v)
        if not frontier:
            it -= 1
            break
        nxt = []
        for u in frontier:
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
                if not queued[v]:
                    queued[v] = True
                    nxt.append(v)
        cand = nxt

    return iter_of, cls_of, blue_parent, red_parent, it, ops
