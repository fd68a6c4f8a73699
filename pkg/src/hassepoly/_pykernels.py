"""Pure-Python graph kernels.

Reference implementation of the routines in ``_ckernels.pyx``; selected at
import when the compiled module is unavailable. Graphs arrive in CSR form
(``succ_ptr``, ``succ_idx``) with successor lists sorted ascending, plus a
topological order ``topo``.
"""
import numpy as np


def _adj(succ_ptr, succ_idx):
    ptr = [int(x) for x in succ_ptr]
    idx = [int(x) for x in succ_idx]
    return [idx[ptr[u]:ptr[u + 1]] for u in range(len(ptr) - 1)]


def closure(n, succ_ptr, succ_idx, topo):
    """Reflexive-transitive closure as an ``n x n`` uint8 matrix."""
    adj = _adj(succ_ptr, succ_idx)
    rows = [0] * n
    for u in reversed([int(x) for x in topo]):
        bits = 1 << u
        for w in adj[u]:
            bits |= rows[w]
        rows[u] = bits
    out = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        bits = rows[u]
        v = 0
        while bits:
            if bits & 1:
                out[u, v] = 1
            bits >>= 1
            v += 1
    return out


def bypassed(reach, succ_ptr, succ_idx):
    """For every arc (CSR order) the least other successor of its tail that
    still reaches its head, or -1 when the arc is a cover."""
    adj = _adj(succ_ptr, succ_idx)
    R = reach.tolist()
    out = []
    for u, succ in enumerate(adj):
        for v in succ:
            hit = -1
            for w in succ:
                if w != v and R[w][v]:
                    hit = w
                    break
            out.append(hit)
    return np.array(out, dtype=np.int32)


def longest_remaining(n, succ_ptr, succ_idx, topo):
    """Longest path length from each vertex and the next hop realising it."""
    adj = _adj(succ_ptr, succ_idx)
    lr = [0] * n
    nxt = [-1] * n
    for u in reversed([int(x) for x in topo]):
        for w in adj[u]:
            if nxt[u] == -1 or lr[w] + 1 > lr[u]:
                lr[u] = lr[w] + 1
                nxt[u] = w
    return np.array(lr, dtype=np.int32), np.array(nxt, dtype=np.int32)


def mobius_table(reach, topo):
    """mu[u, v] for all u <= v (zero elsewhere), via the defining recursion."""
    n = reach.shape[0]
    R = reach.tolist()
    order = [int(x) for x in topo]
    mu = [[0] * n for _ in range(n)]
    for u in range(n):
        row = mu[u]
        above = [v for v in order if R[u][v]]
        for k, v in enumerate(above):
            if v == u:
                row[v] = 1
                continue
            s = 0
            for z in above[:k]:
                if R[z][v]:
                    s += row[z]
            row[v] = -s
    return np.array(mu, dtype=np.int64)


def reentry(reach, succ_ptr, succ_idx, in_face):
    """First arc leaving the face whose head can reach back into it.

    Returns ``(tail, head, target)`` or ``(-1, -1, -1)``.
    """
    adj = _adj(succ_ptr, succ_idx)
    F = [bool(x) for x in in_face]
    members = [x for x in range(len(F)) if F[x]]
    R = reach.tolist()
    for u in members:
        for w in adj[u]:
            if F[w]:
                continue
            row = R[w]
            for x in members:
                if row[x]:
                    return u, w, x
    return -1, -1, -1
