"""Exact independence numbers, hitting-set duality, and family classification.

All alpha answers are exact or absent: searches carry node budgets and
report a budget status instead of rounding.  The r = 2 path relabels the
sample by reverse degeneracy of the complement and runs the compiled
bitset clique kernel; hypergraph instances (r >= 3) and all enumeration
modes run a pure-python ordered branch-and-bound whose pruning combines
the remaining-vertex count with a disjoint-edge packing bound, as the
sizes there are desk scale.

Every positive witness is re-verified edge-by-edge before it is returned.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np

from . import _cliquekernel
from .core import (
    Family,
    KSubset,
    Params,
    binomial,
    lex_unrank,
    star_union_size,
    star_increments,
)
from .model import Edge, SampledHypergraph, rank_of_mask, vertex_masks

DEFAULT_NODE_BUDGET = 2_000_000

STATUS_EXACT = "exact"
STATUS_BUDGET = "budget_exceeded"


@dataclass(frozen=True)
class SolveResult:
    """alpha with witness; on budget_exceeded alpha is the best proven lower bound."""

    alpha: int
    witness: Optional[Family]
    nodes_explored: int
    status: str

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "witness": None if self.witness is None else sorted(self.witness.ranks()),
            "nodes_explored": self.nodes_explored,
            "status": self.status,
        }


@dataclass(frozen=True)
class DecisionResult:
    """Tri-state decision: found True/False, or None when the budget ran out."""

    found: Optional[bool]
    witness: Optional[Family]
    nodes_explored: int


@dataclass(frozen=True)
class HittingSetResult:
    size: int
    vertices: tuple[int, ...]
    nodes_explored: int
    status: str


@dataclass(frozen=True)
class Classification:
    """Size-N family bucket: trivial, or C1/C2/C3 by star-cover deficits."""

    label: str
    centers: Optional[tuple[int, ...]]
    ordered_elements: tuple[int, ...]
    deficits: tuple[int, ...]
    residual: int


# ----------------------------------------------------------------------------
# rank-mask helpers

@lru_cache(maxsize=64)
def _star_rank_masks(n: int, k: int) -> tuple[int, ...]:
    """For each element x (1-based), the bitmask over vertex ranks of the star S_x."""
    masks = [0] * (n + 1)
    for rank, m in enumerate(vertex_masks(n, k)):
        b = m
        while b:
            low = b & -b
            masks[low.bit_length()] |= 1 << rank
            b ^= low
    return tuple(masks)


def family_rank_mask(family: Family) -> int:
    lookup = rank_of_mask(family.n, family.k)
    out = 0
    for m in family.members:
        out |= 1 << lookup[m.bits]
    return out


def _family_from_rank_iter(params: Params, ranks) -> Family:
    return Family([lex_unrank(params.n, params.k, r) for r in sorted(ranks)],
                  n=params.n, k=params.k)


def _mask_to_ranks(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_independent(sample: SampledHypergraph, family: Family) -> bool:
    """True iff no retained edge lies entirely inside the family."""
    if len(family) == 0:
        return True
    if family.n != sample.params.n or family.k != sample.params.k:
        raise ValueError("family shape does not match the sample")
    if sample.num_retained == 0:
        return True
    lookup = rank_of_mask(sample.params.n, sample.params.k)
    member = np.zeros(sample.num_vertices, dtype=bool)
    for m in family.members:
        member[lookup[m.bits]] = True
    return not bool(member[sample.retained].all(axis=1).any())


# ----------------------------------------------------------------------------
# generic ordered branch-and-bound (any r, desk scale)

class _ExactSearch:
    """Binary include/exclude DFS over vertices 0..V-1 in index order.

    Pruning: included + undecided - packing < needed, where packing greedily
    packs alive edges with pairwise-disjoint undecided member sets (each such
    edge forces one exclusion).  Edges may have any size >= 1.
    """

    def __init__(self, nvertices: int, edges: Sequence[tuple], budget: int):
        self.V = nvertices
        self.edges = [tuple(e) for e in edges]
        for e in self.edges:
            if len(set(e)) != len(e):
                raise ValueError(f"edge {e} has repeated vertices")
            for v in e:
                if not 0 <= v < nvertices:
                    raise ValueError(f"edge vertex {v} outside universe 0..{nvertices - 1}")
        self.budget = budget
        self.nodes = 0
        self.sizes = [len(e) for e in self.edges]
        self.emask = [self._mask(e) for e in self.edges]
        self.incidence = [[] for _ in range(nvertices)]
        for j, e in enumerate(self.edges):
            for v in e:
                self.incidence[v].append(j)

    @staticmethod
    def _mask(vs) -> int:
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    def _packing(self, excluded: int, undecided: int) -> int:
        used = 0
        pack = 0
        for j, em in enumerate(self.emask):
            if em & excluded:
                continue
            um = em & undecided
            if um and not um & used:
                pack += 1
                used |= um
        return pack

    def run(self, mode: str, target: int = 0,
            visit: Optional[Callable[[int], bool]] = None):
        """mode 'max' | 'decide' | 'enumerate'.

        max: returns (alpha, best_mask, exhausted).
        decide: returns (found_mask or None, exhausted); target-size search.
        enumerate: calls visit(mask) for every independent set of size target,
        lex order; visit returns False to abort; returns (aborted, exhausted).
        """
        V = self.V
        cnt = [0] * len(self.edges)
        best = [-1, 0]  # size, mask
        found: list = [None]
        aborted = [False]
        budget_hit = [False]

        full = (1 << V) - 1

        def dfs(i: int, included: int, inc_count: int) -> bool:
            # returns True to unwind the whole search
            self.nodes += 1
            if self.nodes > self.budget:
                budget_hit[0] = True
                return True
            passed = ((full >> (V - i)) if i else 0)
            excluded = passed & ~included
            undecided = full & ~passed
            ub = inc_count + (V - i) - self._packing(excluded, undecided)
            if mode == "max":
                if ub <= best[0]:
                    return False
            elif ub < target:
                return False
            if mode != "max" and inc_count == target:
                if mode == "decide":
                    found[0] = included
                    return True
                keep_going = visit(included)
                if not keep_going:
                    aborted[0] = True
                    return True
                return False
            if i == V:
                if mode == "max" and inc_count > best[0]:
                    best[0] = inc_count
                    best[1] = included
                return False
            # include i unless it completes an edge
            can_take = True
            for j in self.incidence[i]:
                if cnt[j] == self.sizes[j] - 1:
                    can_take = False
                    break
            if can_take:
                for j in self.incidence[i]:
                    cnt[j] += 1
                stop = dfs(i + 1, included | (1 << i), inc_count + 1)
                for j in self.incidence[i]:
                    cnt[j] -= 1
                if stop:
                    return True
            return dfs(i + 1, included, inc_count)

        dfs(0, 0, 0)
        exhausted = not budget_hit[0]
        if mode == "max":
            return best[0], best[1], exhausted
        if mode == "decide":
            return found[0], exhausted
        return aborted[0], exhausted


# ----------------------------------------------------------------------------
# r = 2 compiled path

def _force_python_kernel() -> bool:
    return bool(os.environ.get("KNESER_LAB_FORCE_PY"))


def _reverse_degeneracy_perm(sample: SampledHypergraph) -> np.ndarray:
    """Peel the complement by repeated min-degree removal; return reversed order."""
    v = sample.num_vertices
    dense = np.ones((v, v), dtype=bool)
    np.fill_diagonal(dense, False)
    if sample.num_retained:
        a = sample.retained[:, 0]
        b = sample.retained[:, 1]
        dense[a, b] = False
        dense[b, a] = False
    degs = dense.sum(axis=1).astype(np.int64)
    alive = np.ones(v, dtype=bool)
    big = 1 << 40
    order = np.empty(v, dtype=np.int64)
    for i in range(v):
        x = int(np.argmin(np.where(alive, degs, big)))
        order[i] = x
        alive[x] = False
        degs[dense[x] & alive] -= 1
    return order[::-1].copy()


def _complement_words_permuted(sample: SampledHypergraph, perm: np.ndarray) -> np.ndarray:
    v = sample.num_vertices
    w = (v + 63) // 64
    pos = np.empty(v, dtype=np.int64)
    pos[perm] = np.arange(v)
    adj = np.zeros((v, w), dtype=np.uint64)
    if sample.num_retained:
        a = pos[sample.retained[:, 0]]
        b = pos[sample.retained[:, 1]]
        one = np.uint64(1)
        np.bitwise_or.at(adj, (a, b >> 6), one << (b & 63).astype(np.uint64))
        np.bitwise_or.at(adj, (b, a >> 6), one << (a & 63).astype(np.uint64))
    comp = ~adj
    tail = v & 63
    if tail:
        comp[:, w - 1] &= np.uint64((1 << tail) - 1)
    idx = np.arange(v)
    comp[idx, idx >> 6] &= ~(np.uint64(1) << (idx & 63).astype(np.uint64))
    return comp


def _decide_clique_python(adj_ints: list, nvertices: int, t: int, budget: int):
    """Pure-python twin of the compiled kernel, same ordering and node counts."""
    if t <= 0:
        return 1, 0, []
    if nvertices <= 0:
        return 0, 0, []

    def color_sort(r_mask: int):
        order, colors = [], []
        u = r_mask
        c = 0
        while u:
            c += 1
            a = u
            while a:
                low = a & -a
                vtx = low.bit_length() - 1
                order.append(vtx)
                colors.append(c)
                u &= ~low
                a &= ~adj_ints[vtx]
                a &= ~low
        return order, colors

    nodes = 1
    clique: list[int] = []

    def expand(r_mask: int) -> int:
        nonlocal nodes
        order, colors = color_sort(r_mask)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colors[i] < t:
                return 0
            vtx = order[i]
            if len(clique) + 1 >= t:
                clique.append(vtx)
                return 1
            child = r_mask & adj_ints[vtx]
            if child:
                nodes += 1
                if nodes > budget:
                    return -1
                clique.append(vtx)
                res = expand(child)
                if res:
                    return res
                clique.pop()
            r_mask &= ~(1 << vtx)
        return 0

    status = expand((1 << nvertices) - 1)
    return status, nodes, clique


def _kernel_decide(sample: SampledHypergraph, t: int, budget: int):
    """Decide alpha >= t for r = 2; returns (status 1/0/-1, nodes, witness ranks)."""
    perm = _reverse_degeneracy_perm(sample)
    comp = _complement_words_permuted(sample, perm)
    v = sample.num_vertices
    if _cliquekernel.HAVE_NUMBA and not _force_python_kernel():
        status, nodes, wlen, wit = _cliquekernel.decide_clique(
            comp, v, comp.shape[1], t, budget)
        picked = wit[:wlen].tolist() if status == 1 else []
    else:
        w = comp.shape[1]
        shifts = [64 * j for j in range(w)]
        adj_ints = [sum(int(row[j]) << shifts[j] for j in range(w)) for row in comp]
        status, nodes, picked = _decide_clique_python(adj_ints, v, t, budget)
        if status != 1:
            picked = []
    witness = [int(perm[x]) for x in picked]
    return status, int(nodes), witness


# ----------------------------------------------------------------------------
# greedy lower bounds (witness pre-pass)

def _greedy_witness(sample: SampledHypergraph, t: int) -> Optional[list[int]]:
    """Cheap deterministic attempts to exhibit an independent set of size t."""
    params = sample.params
    n, k, r = params.n, params.k, params.r
    nvert = sample.num_vertices
    ntriv = star_union_size(params)

    # a union of r-1 stars is always independent (pigeonhole on the centers)
    if t <= ntriv:
        stars = _star_rank_masks(n, k)
        mask = 0
        for x in range(1, r):
            mask |= stars[x]
        ranks = _mask_to_ranks(mask)[:t]
        return ranks

    if r == 2:
        adj = sample.adjacency_masks()
        stars = _star_rank_masks(n, k)
        if t == ntriv + 1:
            # star plus one outside vertex with no retained edge into it
            for x in range(1, n + 1):
                smask = stars[x]
                outside = ((1 << nvert) - 1) & ~smask
                while outside:
                    low = outside & -outside
                    a = low.bit_length() - 1
                    outside ^= low
                    if adj[a] & smask == 0:
                        return _mask_to_ranks(smask) + [a]
        # greedy maximal sets from a couple of fixed orders
        orders = [range(nvert),
                  sorted(range(nvert), key=lambda u: (bin(adj[u]).count("1"), u))]
        for order in orders:
            taken: list[int] = []
            blocked = 0
            for u in order:
                if blocked >> u & 1:
                    continue
                taken.append(u)
                blocked |= adj[u] | (1 << u)
                if len(taken) >= t:
                    return taken
    return None


# ----------------------------------------------------------------------------
# public solver operations

def exists_independent_of_size(sample: SampledHypergraph, t: int,
                               budget: int = DEFAULT_NODE_BUDGET) -> DecisionResult:
    """Does the sample contain an independent set of size t?

    Equivalent to min-hitting-set <= V - t; the search exits as soon as a
    witness appears or the bound rules one out.  found=None means budget.
    """
    params = sample.params
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if t > sample.num_vertices:
        return DecisionResult(False, None, 0)
    if t == 0:
        return DecisionResult(True, Family([], n=params.n, k=params.k), 0)
    quick = _greedy_witness(sample, t)
    if quick is not None:
        fam = _family_from_rank_iter(params, quick)
        assert is_independent(sample, fam), "greedy produced a bogus witness"
        return DecisionResult(True, fam, 0)
    if sample.num_retained == 0:
        fam = _family_from_rank_iter(params, range(t))
        return DecisionResult(True, fam, 0)
    if params.r == 2:
        status, nodes, wit = _kernel_decide(sample, t, budget)
        if status == 1:
            fam = _family_from_rank_iter(params, wit)
            assert is_independent(sample, fam), "kernel produced a bogus witness"
            return DecisionResult(True, fam, nodes)
        if status == 0:
            return DecisionResult(False, None, nodes)
        return DecisionResult(None, None, nodes)
    search = _ExactSearch(sample.num_vertices, [tuple(r) for r in sample.retained.tolist()],
                          budget)
    found_mask, exhausted = search.run("decide", target=t)
    if found_mask is not None:
        fam = _family_from_rank_iter(params, _mask_to_ranks(found_mask))
        assert is_independent(sample, fam), "search produced a bogus witness"
        return DecisionResult(True, fam, search.nodes)
    if exhausted:
        return DecisionResult(False, None, search.nodes)
    return DecisionResult(None, None, search.nodes)


def max_independent_set(sample: SampledHypergraph,
                        budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact alpha with witness; V - alpha is the minimum hitting set size."""
    params = sample.params
    nvert = sample.num_vertices
    if sample.num_retained == 0:
        fam = _family_from_rank_iter(params, range(nvert))
        return SolveResult(nvert, fam, 0, STATUS_EXACT)
    if params.r == 2:
        lb_ranks = _greedy_witness(sample, star_union_size(params)) or []
        # grow one decision at a time; each found witness raises the floor
        best = list(lb_ranks)
        nodes_total = 0
        while True:
            t = len(best) + 1
            if t > nvert:
                break
            remaining = budget - nodes_total
            if remaining <= 0:
                fam = _family_from_rank_iter(params, best)
                return SolveResult(len(best), fam, nodes_total, STATUS_BUDGET)
            status, nodes, wit = _kernel_decide(sample, t, remaining)
            nodes_total += nodes
            if status == 1:
                best = wit
                continue
            if status == 0:
                break
            fam = _family_from_rank_iter(params, best)
            return SolveResult(len(best), fam, nodes_total, STATUS_BUDGET)
        fam = _family_from_rank_iter(params, best)
        assert is_independent(sample, fam), "solver produced a bogus witness"
        return SolveResult(len(best), fam, nodes_total, STATUS_EXACT)
    search = _ExactSearch(nvert, [tuple(r) for r in sample.retained.tolist()], budget)
    alpha, mask, exhausted = search.run("max")
    fam = _family_from_rank_iter(params, _mask_to_ranks(mask))
    assert is_independent(sample, fam), "solver produced a bogus witness"
    status = STATUS_EXACT if exhausted else STATUS_BUDGET
    return SolveResult(alpha, fam, search.nodes, status)


def min_hitting_set(edges: Sequence, universe,
                    budget: int = DEFAULT_NODE_BUDGET) -> HittingSetResult:
    """Minimum set of vertices meeting every edge, by complementing a maximum
    independent set (tau = V - alpha).

    edges are Edge objects or plain vertex tuples; universe is a vertex count
    or an iterable of vertex ids covering every edge.
    """
    plain = [e.key if isinstance(e, Edge) else tuple(e) for e in edges]
    if isinstance(universe, int):
        ids = list(range(universe))
    else:
        ids = sorted(set(universe))
    local = {v: i for i, v in enumerate(ids)}
    for e in plain:
        for v in e:
            if v not in local:
                raise ValueError(f"edge vertex {v} missing from the universe")
    nvert = len(ids)
    search = _ExactSearch(nvert, [tuple(local[v] for v in e) for e in plain], budget)
    alpha, mask, exhausted = search.run("max")
    witness = tuple(ids[i] for i in range(nvert) if not mask >> i & 1)
    status = STATUS_EXACT if exhausted else STATUS_BUDGET
    # on budget the complement of the best independent set is still a valid
    # hitting set, just maybe not minimum
    return HittingSetResult(nvert - alpha, witness, search.nodes, status)


def enumerate_independent_sets_of_size(sample: SampledHypergraph, t: int,
                                       visit: Callable[[list[int]], bool],
                                       budget: int = DEFAULT_NODE_BUDGET):
    """Exhaustively visit every independent t-set (as sorted rank lists).

    visit returns False to stop early.  Returns (completed, nodes): completed
    is True only if the enumeration ran to exhaustion.
    """
    search = _ExactSearch(sample.num_vertices,
                          [tuple(r) for r in sample.retained.tolist()], budget)
    aborted, exhausted = search.run("enumerate", target=t,
                                    visit=lambda mask: visit(_mask_to_ranks(mask)))
    return (exhausted and not aborted), search.nodes


def is_trivial_union(family: Family, params: Params) -> Optional[tuple[int, ...]]:
    """Centers Q with family == star_union(Q), |Q| = r-1, if any."""
    if len(family) != star_union_size(params):
        return None
    stars = _star_rank_masks(params.n, params.k)
    fmask = family_rank_mask(family)
    candidates = [x for x in range(1, params.n + 1) if stars[x] & ~fmask == 0]
    want = len(family)
    for q in combinations(candidates, params.r - 1):
        union = 0
        for x in q:
            union |= stars[x]
        if union.bit_count() == want:
            return q
    return None


def exists_nontrivial_independent_of_size(sample: SampledHypergraph, t: int,
                                          budget: int = DEFAULT_NODE_BUDGET) -> DecisionResult:
    """Is there an independent t-set that is not a union of r-1 stars?

    Enumerates independent t-sets in lex order, skipping trivial unions;
    found=None when the budget ran out before either answer.
    """
    params = sample.params
    hit: list = [None]

    def visit(ranks: list[int]) -> bool:
        fam = _family_from_rank_iter(params, ranks)
        if is_trivial_union(fam, params) is None:
            hit[0] = fam
            return False
        return True

    completed, nodes = enumerate_independent_sets_of_size(sample, t, visit, budget)
    if hit[0] is not None:
        assert is_independent(sample, hit[0])
        return DecisionResult(True, hit[0], nodes)
    if completed:
        return DecisionResult(False, None, nodes)
    return DecisionResult(None, None, nodes)


def classify_family(family: Family, params: Params) -> Classification:
    """Bucket a size-N independent-candidate family: trivial, C1, C2, or C3.

    Elements are ordered by decreasing |family ∩ S_x| (ties by element value);
    deficits z_i measure how far the i-th star falls short of the most it
    could newly cover.  Exact integer comparisons throughout.
    """
    n, k, r = params.n, params.k, params.r
    ntriv = star_union_size(params)
    if len(family) != ntriv:
        raise ValueError(f"classifier takes families of size {ntriv}, got {len(family)}")
    if family.n != n or family.k != k:
        raise ValueError("family shape does not match params")
    stars = _star_rank_masks(n, k)
    fmask = family_rank_mask(family)
    centers = is_trivial_union(family, params)

    by_elem = [(x, (stars[x] & fmask).bit_count()) for x in range(1, n + 1)]
    by_elem.sort(key=lambda p: (-p[1], p[0]))
    ordered = tuple(x for x, _ in by_elem)

    incs = star_increments(params)
    deficits = []
    union = 0
    for i in range(r - 1):
        x = ordered[i]
        new = (stars[x] & fmask & ~union).bit_count()
        deficits.append(incs[i] - new)
        union |= stars[x] & fmask
    residual = (fmask & ~union).bit_count()
    deficits = tuple(deficits)

    if centers is not None:
        return Classification("trivial", centers, ordered, deficits, residual)

    last_count = by_elem[r - 2][1]
    if last_count * 2 * r * r * k < ntriv:
        label = "C1"
    elif 4 * r * r * sum(deficits) >= ntriv:
        label = "C2"
    else:
        label = "C3"
    return Classification(label, None, ordered, deficits, residual)
