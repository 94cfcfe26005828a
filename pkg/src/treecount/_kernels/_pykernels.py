"""Pure-Python kernels.

Line-for-line twin of ``_ckernels.pyx``; used when the compiled extension is
not importable. Both consume the same splitmix64 stream, so random graph
generation is bit-identical across backends.
"""

from collections import deque

import numpy as np

MASK64 = (1 << 64) - 1
PROBES = 32


def splitmix64(state):
    """Advance ``state``; return ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def ball(indptr, indices, source, radius):
    """Vertices within ``radius`` of ``source`` (BFS order) and their distances.

    A negative radius means unbounded.
    """
    dist = {source: 0}
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 0 <= radius <= du:
            continue
        for p in range(indptr[u], indptr[u + 1]):
            w = int(indices[p])
            if w not in dist:
                dist[w] = du + 1
                order.append(w)
                queue.append(w)
    verts = np.array(order, dtype=np.int64)
    dists = np.array([dist[v] for v in order], dtype=np.int64)
    return verts, dists


def girth(indptr, indices, bound):
    """Length of the shortest cycle if it is ``<= bound``, else 0."""
    n = len(indptr) - 1
    best = bound + 1
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        touched = [root]
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for p in range(indptr[u], indptr[u + 1]):
                w = int(indices[p])
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    touched.append(w)
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if length < best:
                        best = length
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    return best if best <= bound else 0


def random_regular(n, d, min_girth, seed, max_attempts):
    """Sequential stub pairing with per-pair rejection of short cycles.

    Returns ``(edges, attempts)`` with ``edges`` an ``(n*d/2, 2)`` array, or
    ``(None, max_attempts)`` when every attempt dead-ends.
    """
    reach = max(min_girth, 3) - 2
    state = seed & MASK64
    m = n * d // 2
    for attempt in range(1, max_attempts + 1):
        deg = [0] * n
        nbr = [[] for _ in range(n)]
        open_ = list(range(n))
        pos = list(range(n))
        n_open = n
        mark = [0] * n
        stamp = 0
        edges = []
        ok = True
        while n_open > 0:
            if n_open == 1:
                ok = False
                break
            state, r = splitmix64(state)
            u = open_[r % n_open]
            stamp += 1
            # forbid every vertex within `reach` of u (includes u itself)
            mark[u] = stamp
            frontier = [u]
            for _ in range(reach):
                nxt = []
                for x in frontier:
                    for y in nbr[x]:
                        if mark[y] != stamp:
                            mark[y] = stamp
                            nxt.append(y)
                frontier = nxt
                if not frontier:
                    break
            v = -1
            for _ in range(PROBES):
                state, r = splitmix64(state)
                c = open_[r % n_open]
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
                state, r = splitmix64(state)
                target = r % cnt
                for i in range(n_open):
                    c = open_[i]
                    if mark[c] != stamp:
                        if target == 0:
                            v = c
                            break
                        target -= 1
            nbr[u].append(v)
            nbr[v].append(u)
            edges.append((u, v) if u < v else (v, u))
            for x in (u, v):
                deg[x] += 1
                if deg[x] == d:
                    i = pos[x]
                    last = open_[n_open - 1]
                    open_[i] = last
                    pos[last] = i
                    open_[n_open - 1] = x
                    pos[x] = n_open - 1
                    n_open -= 1
        if ok and len(edges) == m:
            return np.array(edges, dtype=np.int64).reshape(m, 2), attempt
    return None, max_attempts
