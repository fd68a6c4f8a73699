# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; same contracts as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def closure(Py_ssize_t n, const int[::1] succ_ptr, const int[::1] succ_idx,
            const int[::1] topo):
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] R = out
    cdef Py_ssize_t t, k, j, u, w
    for t in range(n - 1, -1, -1):
        u = topo[t]
        R[u, u] = 1
        for k in range(succ_ptr[u], succ_ptr[u + 1]):
            w = succ_idx[k]
            for j in range(n):
                if R[w, j]:
                    R[u, j] = 1
    return out


def bypassed(const unsigned char[:, ::1] reach, const int[::1] succ_ptr,
             const int[::1] succ_idx):
    cdef Py_ssize_t n = reach.shape[0]
    cdef Py_ssize_t m = succ_idx.shape[0]
    out = np.full(m, -1, dtype=np.int32)
    cdef int[::1] res = out
    cdef Py_ssize_t u, k, k2, v, w
    for u in range(n):
        for k in range(succ_ptr[u], succ_ptr[u + 1]):
            v = succ_idx[k]
            for k2 in range(succ_ptr[u], succ_ptr[u + 1]):
                w = succ_idx[k2]
                if w != v and reach[w, v]:
                    res[k] = <int>w
                    break
    return out


def longest_remaining(Py_ssize_t n, const int[::1] succ_ptr,
                      const int[::1] succ_idx, const int[::1] topo):
    lr_arr = np.zeros(n, dtype=np.int32)
    nxt_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] lr = lr_arr
    cdef int[::1] nxt = nxt_arr
    cdef Py_ssize_t t, k, u, w
    for t in range(n - 1, -1, -1):
        u = topo[t]
        for k in range(succ_ptr[u], succ_ptr[u + 1]):
            w = succ_idx[k]
            if nxt[u] == -1 or lr[w] + 1 > lr[u]:
                lr[u] = lr[w] + 1
                nxt[u] = <int>w
    return lr_arr, nxt_arr


def mobius_table(const unsigned char[:, ::1] reach, const int[::1] topo):
    cdef Py_ssize_t n = reach.shape[0]
    mu_arr = np.zeros((n, n), dtype=np.int64)
    cdef long long[:, ::1] mu = mu_arr
    above_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] above = above_arr
    cdef Py_ssize_t u, t, k, j, na, v, z
    cdef long long s
    for u in range(n):
        na = 0
        for t in range(n):
            v = topo[t]
            if reach[u, v]:
                above[na] = <int>v
                na += 1
        for k in range(na):
            v = above[k]
            if v == u:
                mu[u, v] = 1
                continue
            s = 0
            for j in range(k):
                z = above[j]
                if reach[z, v]:
                    s += mu[u, z]
            mu[u, v] = -s
    return mu_arr


def reentry(const unsigned char[:, ::1] reach, const int[::1] succ_ptr,
            const int[::1] succ_idx, const unsigned char[::1] in_face):
    cdef Py_ssize_t n = reach.shape[0]
    cdef Py_ssize_t u, k, w, x
    for u in range(n):
        if not in_face[u]:
            continue
        for k in range(succ_ptr[u], succ_ptr[u + 1]):
            w = succ_idx[k]
            if in_face[w]:
                continue
            for x in range(n):
                if in_face[x] and reach[w, x]:
                    return u, w, x
    return -1, -1, -1
