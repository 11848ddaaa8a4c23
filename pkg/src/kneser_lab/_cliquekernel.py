"""Bitset branch-and-bound for the pair-edge (r = 2) independence decision.

An independent set of the sampled graph is a clique of its complement, so
the decision "alpha >= t" runs as a clique search with the classic greedy
colouring bound: candidates are coloured class by class, a clique can take
at most one vertex per class, and a branch dies when the current clique
plus the candidate's colour cannot reach t.  Vertices are expected to be
relabelled by the caller (reverse degeneracy order works well); the kernel
just follows index order.

Compiled with numba when available; solver.py carries a pure-python twin
with the same node accounting, used as a fallback and cross-checked in
tests.  Node counts, and therefore budget verdicts, are identical by
construction.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True, inline="always")
def _ctz64(x):
    n = 0
    if x & np.uint64(0xFFFFFFFF) == np.uint64(0):
        n += 32
        x >>= np.uint64(32)
    if x & np.uint64(0xFFFF) == np.uint64(0):
        n += 16
        x >>= np.uint64(16)
    if x & np.uint64(0xFF) == np.uint64(0):
        n += 8
        x >>= np.uint64(8)
    if x & np.uint64(0xF) == np.uint64(0):
        n += 4
        x >>= np.uint64(4)
    if x & np.uint64(0x3) == np.uint64(0):
        n += 2
        x >>= np.uint64(2)
    if x & np.uint64(0x1) == np.uint64(0):
        n += 1
    return n


@njit(cache=True)
def _color_sort(R, adj, order_row, colors_row, W, tmpU, tmpA):
    """Greedy sequential colouring of the candidate set R, ascending classes."""
    cnt = 0
    for w in range(W):
        tmpU[w] = R[w]
    c = 0
    while True:
        nonzero = False
        for w in range(W):
            if tmpU[w] != np.uint64(0):
                nonzero = True
                break
        if not nonzero:
            break
        c += 1
        for w in range(W):
            tmpA[w] = tmpU[w]
        while True:
            wi = -1
            for w in range(W):
                if tmpA[w] != np.uint64(0):
                    wi = w
                    break
            if wi < 0:
                break
            b = _ctz64(tmpA[wi])
            v = (wi << 6) + b
            order_row[cnt] = v
            colors_row[cnt] = c
            cnt += 1
            bit = np.uint64(1) << np.uint64(b)
            tmpU[wi] &= ~bit
            for w in range(W):
                tmpA[w] &= ~adj[v, w]
            tmpA[wi] &= ~bit
    return cnt


@njit(cache=True)
def decide_clique(adj, V, W, t, budget):
    """Search for a clique of size >= t; returns (status, nodes, found_len, witness).

    status: 1 found (witness[:found_len] is the clique), 0 ruled out,
    -1 node budget exhausted.  A node is one child-frame expansion.
    """
    witness = np.zeros(max(t, 1), dtype=np.int32)
    if t <= 0:
        return 1, 0, 0, witness
    if V <= 0:
        return 0, 0, 0, witness

    maxd = t + 2
    R = np.zeros((maxd, W), dtype=np.uint64)
    order = np.zeros((maxd, V), dtype=np.int32)
    colors = np.zeros((maxd, V), dtype=np.int32)
    ptr = np.zeros(maxd, dtype=np.int32)
    clique = np.zeros(maxd, dtype=np.int32)
    tmpU = np.zeros(W, dtype=np.uint64)
    tmpA = np.zeros(W, dtype=np.uint64)

    for v in range(V):
        R[0, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    ptr[0] = _color_sort(R[0], adj, order[0], colors[0], W, tmpU, tmpA) - 1
    depth = 0
    qsize = 0
    nodes = 1

    while depth >= 0:
        i = ptr[depth]
        if i < 0 or qsize + colors[depth, i] < t:
            depth -= 1
            qsize -= 1
            if depth >= 0:
                v = clique[depth]
                R[depth, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
                ptr[depth] -= 1
            continue
        v = order[depth, i]
        if qsize + 1 >= t:
            for j in range(qsize):
                witness[j] = clique[j]
            witness[qsize] = v
            return 1, nodes, qsize + 1, witness
        empty = True
        for w in range(W):
            x = R[depth, w] & adj[v, w]
            R[depth + 1, w] = x
            if x != np.uint64(0):
                empty = False
        if empty:
            R[depth, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
            ptr[depth] -= 1
            continue
        nodes += 1
        if nodes > budget:
            return -1, nodes, 0, witness
        clique[depth] = v
        qsize += 1
        depth += 1
        ptr[depth] = _color_sort(R[depth], adj, order[depth], colors[depth], W, tmpU, tmpA) - 1

    return 0, nodes, 0, witness
