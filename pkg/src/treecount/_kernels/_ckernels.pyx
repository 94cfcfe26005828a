# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Semantics match ``_pykernels`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()

DEF PROBES = 32


cdef inline uint64_t _splitmix64(uint64_t *state) nogil:
    cdef uint64_t z
    state[0] += 0x9E3779B97F4A7C15ULL
    z = state[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def splitmix64(state):
    cdef uint64_t s = <uint64_t>(state & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t out = _splitmix64(&s)
    return int(s), int(out)


def ball(const int64_t[::1] indptr, const int64_t[::1] indices, int64_t source, int64_t radius):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[int64_t, ndim=1] dist_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] dist = dist_arr
    cdef cnp.ndarray[int64_t, ndim=1] order_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] order = order_arr
    cdef Py_ssize_t head = 0, tail = 0, p
    cdef int64_t u, w, du
    dist[source] = 0
    order[tail] = source
    tail += 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u]
        if radius >= 0 and du >= radius:
            continue
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = du + 1
                order[tail] = w
                tail += 1
    verts = order_arr[:tail].copy()
    return verts, dist_arr[verts]


def girth(const int64_t[::1] indptr, const int64_t[::1] indices, int64_t bound):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef int64_t best = bound + 1
    cdef cnp.ndarray[int64_t, ndim=1] dist_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] parent_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] queue_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] dist = dist_arr
    cdef int64_t[::1] parent = parent_arr
    cdef int64_t[::1] queue = queue_arr
    cdef Py_ssize_t root, head, tail, p, i
    cdef int64_t u, w, du, length
    with nogil:
        for root in range(n):
            head = 0
            tail = 0
            dist[root] = 0
            queue[tail] = root
            tail += 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u]
                if 2 * du + 1 >= best:
                    break
                for p in range(indptr[u], indptr[u + 1]):
                    w = indices[p]
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
                    elif w != parent[u]:
                        length = du + dist[w] + 1
                        if length < best:
                            best = length
            for i in range(tail):
                dist[queue[i]] = -1
                parent[queue[i]] = -1
    return best if best <= bound else 0


def random_regular(int64_t n, int64_t d, int64_t min_girth, seed, int64_t max_attempts):
    cdef int64_t reach = (min_girth if min_girth > 3 else 3) - 2
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef int64_t m = n * d // 2
    cdef cnp.ndarray[int64_t, ndim=1] deg_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] nbr_arr = np.zeros(max(n * d, 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] open_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] pos_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] mark_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] front_arr = np.zeros(max(n, 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] edges_arr = np.zeros((m, 2), dtype=np.int64)
    cdef int64_t[::1] deg = deg_arr
    cdef int64_t[::1] nbr = nbr_arr
    cdef int64_t[::1] open_ = open_arr
    cdef int64_t[::1] pos = pos_arr
    cdef int64_t[::1] mark = mark_arr
    cdef int64_t[::1] front = front_arr
    cdef int64_t[:, ::1] edges = edges_arr
    cdef int64_t attempt, n_open, stamp, n_edges, u, v, c, x, y, i, j, k, last, cnt
    cdef int64_t f_lo, f_hi, f_end, step
    cdef uint64_t r, target
    cdef bint ok
    cdef int64_t pair[2]
    for attempt in range(1, max_attempts + 1):
        with nogil:
            for i in range(n):
                deg[i] = 0
                open_[i] = i
                pos[i] = i
                mark[i] = 0
            n_open = n
            stamp = 0
            n_edges = 0
            ok = True
            while n_open > 0:
                if n_open == 1:
                    ok = False
                    break
                r = _splitmix64(&state)
                u = open_[r % <uint64_t>n_open]
                stamp += 1
                mark[u] = stamp
                front[0] = u
                f_lo = 0
                f_hi = 1
                for step in range(reach):
                    f_end = f_hi
                    for i in range(f_lo, f_hi):
                        x = front[i]
                        for j in range(deg[x]):
                            y = nbr[x * d + j]
                            if mark[y] != stamp:
                                mark[y] = stamp
                                front[f_end] = y
                                f_end += 1
                    if f_end == f_hi:
                        break
                    f_lo = f_hi
                    f_hi = f_end
                v = -1
                for k in range(PROBES):
                    r = _splitmix64(&state)
                    c = open_[r % <uint64_t>n_open]
                    if mark[c] != stamp:
                        v = c
                        break
                if v < 0:
                    cnt = 0
                    for i in range(n_open):
                        if mark[open_[i]] != stamp:
                            cnt += 1
                    if cnt == 0:
                        ok = False
                        break
                    r = _splitmix64(&state)
                    target = r % <uint64_t>cnt
                    for i in range(n_open):
                        c = open_[i]
                        if mark[c] != stamp:
                            if target == 0:
                                v = c
                                break
                            target -= 1
                nbr[u * d + deg[u]] = v
                nbr[v * d + deg[v]] = u
                if u < v:
                    edges[n_edges, 0] = u
                    edges[n_edges, 1] = v
                else:
                    edges[n_edges, 0] = v
                    edges[n_edges, 1] = u
                n_edges += 1
                pair[0] = u
                pair[1] = v
                for k in range(2):
                    x = pair[k]
                    deg[x] += 1
                    if deg[x] == d:
                        i = pos[x]
                        last = open_[n_open - 1]
                        open_[i] = last
                        pos[last] = i
                        open_[n_open - 1] = x
                        pos[x] = n_open - 1
                        n_open -= 1
        if ok and n_edges == m:
            return edges_arr, attempt
    return None, max_attempts
