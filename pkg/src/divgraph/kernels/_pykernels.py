"""Pure-Python graph kernels.

Same signatures and results as the compiled ``_ckernels`` module. Graphs come
in as CSR arrays (``indptr``, ``indices``) over vertices ``0..n-1``; dense
adjacency matrices are flat byte buffers of length ``n*n``.
"""
from array import array
from collections import deque


def distance_matrix(n, indptr, indices):
    """All-pairs BFS distances, row-major, ``-1`` for unreachable pairs."""
    dist = array("i", [-1]) * (n * n)
    for s in range(n):
        base = s * n
        dist[base + s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            dv = dist[base + v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[base + w] < 0:
                    dist[base + w] = dv
                    queue.append(w)
    return dist


def component_labels(n, indptr, indices):
    """Label each vertex with the smallest vertex index in its component."""
    label = array("i", [-1]) * n
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = s
        stack = [s]
        while stack:
            v = stack.pop()
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if label[w] < 0:
                    label[w] = s
                    stack.append(w)
    return label


def shortest_cycle(n, indptr, indices):
    """Girth by BFS from every vertex; 0 when the graph is a forest."""
    best = 0
    dist = array("i", [-1]) * n
    parent = array("i", [-1]) * n
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        parent[s] = -1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best and 2 * dist[v] + 1 >= best:
                break
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if best == 0 or length < best:
                        best = length
    return best


def _cycle_of_length(n, indptr, indices, dist, length, root):
    # DFS over simple paths rooted at `root` through larger-indexed vertices.
    on_path = bytearray(n)
    on_path[root] = 1
    stack = [(root, indptr[root])]
    while stack:
        v, k = stack[-1]
        depth = len(stack) - 1
        if k == indptr[v + 1]:
            stack.pop()
            on_path[v] = 0
            continue
        stack[-1] = (v, k + 1)
        w = indices[k]
        if w == root:
            if depth + 1 == length and depth >= 2:
                return True
            continue
        if w < root or on_path[w]:
            continue
        d = dist[w * n + root]
        if d < 0 or depth + 1 + d > length:
            continue
        if depth + 1 == length:
            continue
        on_path[w] = 1
        stack.append((w, indptr[w]))
    return False


def shortest_cycle_at_least(n, indptr, indices, dist, min_len, step):
    """Length of the shortest cycle with at least ``min_len`` vertices, or 0.

    Iterative deepening over candidate lengths ``min_len, min_len+step, ...``
    (``step`` is 2 for bipartite graphs). ``dist`` is the distance matrix,
    used to prune paths that cannot close in time.
    """
    length = min_len
    while length <= n:
        for root in range(n):
            if _cycle_of_length(n, indptr, indices, dist, length, root):
                return length
        length += step
    return 0


def find_embedding(pn, p_adj, order, hn, h_adj, domain, induced):
    """Backtracking subgraph search.

    Pattern vertices are assigned in ``order``; ``domain[u*hn + h]`` says
    whether pattern vertex ``u`` may map to host vertex ``h``. Returns the
    host image of each pattern vertex, or None.
    """
    if pn == 0:
        return []
    image = [-1] * pn
    used = bytearray(hn)
    cursor = [0] * pn
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
            return image
        pos += 1
        cursor[pos] = 0
    return None
