# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; mirrors ``_pykernels`` call for call."""
from array import array

from libc.stdlib cimport free, malloc
from libc.string cimport memset


def distance_matrix(int n, const int[:] indptr, const int[:] indices):
    cdef object out = array("i", [-1]) * (n * n)
    cdef int[:] dist = out
    cdef int* queue = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int s, v, w, k, head, tail, base, dv
    try:
        for s in range(n):
            base = s * n
            dist[base + s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[base + v] + 1
                for k in range(indptr[v], indptr[v + 1]):
                    w = indices[k]
                    if dist[base + w] < 0:
                        dist[base + w] = dv
                        queue[tail] = w
                        tail += 1
    finally:
        free(queue)
    return out


def component_labels(int n, const int[:] indptr, const int[:] indices):
    cdef object out = array("i", [-1]) * n
    cdef int[:] label = out
    cdef int* stack = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int s, v, w, k, top
    try:
        for s in range(n):
            if label[s] >= 0:
                continue
            label[s] = s
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                for k in range(indptr[v], indptr[v + 1]):
                    w = indices[k]
                    if label[w] < 0:
                        label[w] = s
                        stack[top] = w
                        top += 1
    finally:
        free(stack)
    return out


def shortest_cycle(int n, const int[:] indptr, const int[:] indices):
    cdef int best = 0
    cdef int* dist = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* parent = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* queue = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int s, i, v, w, k, head, tail, length
    try:
        for s in range(n):
            for i in range(n):
                dist[i] = -1
            dist[s] = 0
            parent[s] = -1
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                v = queue[head]
                head += 1
                if best and 2 * dist[v] + 1 >= best:
                    break
                for k in range(indptr[v], indptr[v + 1]):
                    w = indices[k]
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue[tail] = w
                        tail += 1
                    elif parent[v] != w:
                        length = dist[v] + dist[w] + 1
                        if best == 0 or length < best:
                            best = length
    finally:
        free(dist)
        free(parent)
        free(queue)
    return best


cdef bint _cycle_of_length(int n, const int[:] indptr, const int[:] indices,
                           const int[:] dist, int length, int root,
                           char* on_path, int* path, int* cursor):
    cdef int depth, v, k, w, d
    memset(on_path, 0, n)
    on_path[root] = 1
    path[0] = root
    cursor[0] = indptr[root]
    depth = 0
    while depth >= 0:
        v = path[depth]
        k = cursor[depth]
        if k == indptr[v + 1]:
            on_path[v] = 0
            depth -= 1
            continue
        cursor[depth] = k + 1
        w = indices[k]
        if w == root:
            if depth + 1 == length and depth >= 2:
                return True
            continue
        if w < root or on_path[w]:
            continue
        d = dist[w * n + root]
        if d < 0 or depth + 1 + d > length or depth + 1 == length:
            continue
        on_path[w] = 1
        depth += 1
        path[depth] = w
        cursor[depth] = indptr[w]
    return False


def shortest_cycle_at_least(int n, const int[:] indptr, const int[:] indices,
                            const int[:] dist, int min_len, int step):
    cdef int length = min_len
    cdef int root
    cdef char* on_path = <char*> malloc(max(n, 1))
    cdef int* path = <int*> malloc((n + 1) * sizeof(int))
    cdef int* cursor = <int*> malloc((n + 1) * sizeof(int))
    try:
        while length <= n:
            for root in range(n):
                if _cycle_of_length(n, indptr, indices, dist, length, root,
                                    on_path, path, cursor):
                    return length
            length += step
        return 0
    finally:
        free(on_path)
        free(path)
        free(cursor)


def find_embedding(int pn, const unsigned char[:] p_adj, const int[:] order,
                   int hn, const unsigned char[:] h_adj,
                   const unsigned char[:] domain, bint induced):
    if pn == 0:
        return []
    cdef int* image = <int*> malloc(pn * sizeof(int))
    cdef int* cursor = <int*> malloc(pn * sizeof(int))
    cdef char* used = <char*> malloc(max(hn, 1))
    cdef int pos, u, h, j, w, hw
    cdef bint ok, found
    try:
        for j in range(pn):
            image[j] = -1
            cursor[j] = 0
        memset(used, 0, hn)
        pos = 0
        while pos >= 0:
            u = order[pos]
            if image[u] >= 0:
                used[image[u]] = 0
                image[u] = -1
            h = cursor[pos]
            found = False
            while h < hn:
                if domain[u * hn + h] and not used[h]:
                    ok = True
                    for j in range(pos):
                        w = order[j]
                        hw = image[w]
                        if p_adj[u * pn + w]:
                            if not h_adj[h * hn + hw]:
                                ok = False
                                break
                        elif induced and h_adj[h * hn + hw]:
                            ok = False
                            break
                    if ok:
                        found = True
                        break
                h += 1
            if not found:
                cursor[pos] = 0
                pos -= 1
                continue
            image[u] = h
            used[h] = 1
            cursor[pos] = h + 1
            if pos == pn - 1:
                return [image[j] for j in range(pn)]
            pos += 1
            cursor[pos] = 0
        return None
    finally:
        free(image)
        free(cursor)
        free(used)
