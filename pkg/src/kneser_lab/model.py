"""Kneser hypergraph KG^r_{n,k} and its Bernoulli-diluted samples.

Vertices are the C(n,k) k-subsets of {1..n} indexed by their rank in the
prefer-smaller-elements order; an edge is an unordered r-tuple of pairwise
disjoint vertices, identified by its ascending rank tuple.  Everything is
materialized explicitly, so budgets guard the astronomically large cases
instead of silently approximating.

Two samplers produce KG^r_{n,k}(p):

* sample_explicit walks every edge once and keeps it iff its hash-stream
  uniform clears p.  Deterministic in (params, p, seed) and monotone in p.
* sample_by_count draws the retained count m ~ Binomial(|E|, p) exactly and
  then m distinct uniform edges, never enumerating the edge set.

Both have the same distribution; tests compare them edge-by-edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _streams
from .core import (
    BudgetExceededError,
    Family,
    KSubset,
    Params,
    _unrank_elements,
    binomial,
    lex_unrank,
    total_edge_count,
)

EXPLICIT_SAMPLER_BUDGET = 10**7
DUPLICATE_REJECTION_CAP = 10**4
INDUCED_COUNT_BUDGET = 10**8


@lru_cache(maxsize=32)
def vertex_masks(n: int, k: int) -> tuple[int, ...]:
    """Bitmask of every k-subset of {1..n}, indexed by rank."""
    return tuple(
        sum(1 << (e - 1) for e in combo)
        for combo in combinations(range(1, n + 1), k)
    )


@lru_cache(maxsize=32)
def rank_of_mask(n: int, k: int) -> dict:
    return {m: i for i, m in enumerate(vertex_masks(n, k))}


def vertex_of_rank(params: Params, rank: int) -> KSubset:
    return lex_unrank(params.n, params.k, rank)


@dataclass(frozen=True)
class Edge:
    """An unordered edge, keyed by its ascending tuple of vertex ranks."""

    key: tuple[int, ...]
    n: int
    k: int

    def members(self) -> tuple[KSubset, ...]:
        return tuple(lex_unrank(self.n, self.k, r) for r in self.key)

    def to_element_lists(self) -> list[list[int]]:
        return [list(m.elements()) for m in self.members()]


def _edge_key_from_masks(n: int, k: int, masks: Iterable[int]) -> tuple[int, ...]:
    lookup = rank_of_mask(n, k)
    return tuple(sorted(lookup[m] for m in masks))


# ----------------------------------------------------------------------------
# stars and explicit families

def star(params: Params, x: int) -> Family:
    """All k-subsets containing the element x, in rank order."""
    if not 1 <= x <= params.n:
        raise ValueError(f"element {x} outside 1..{params.n}")
    bit = 1 << (x - 1)
    members = [
        KSubset(m, params.n)
        for m in vertex_masks(params.n, params.k)
        if m & bit
    ]
    return Family(members)


def star_union(params: Params, centers: Sequence[int]) -> Family:
    """All k-subsets meeting the given distinct elements, in rank order."""
    if len(set(centers)) != len(centers):
        raise ValueError(f"repeated centers in {centers}")
    if not centers:
        raise ValueError("need at least one center")
    for x in centers:
        if not 1 <= x <= params.n:
            raise ValueError(f"element {x} outside 1..{params.n}")
    qmask = sum(1 << (x - 1) for x in centers)
    members = [
        KSubset(m, params.n)
        for m in vertex_masks(params.n, params.k)
        if m & qmask
    ]
    return Family(members, n=params.n, k=params.k)


# ----------------------------------------------------------------------------
# exact edge counting

def induced_edge_count(family: Family, r: int, budget: int = INDUCED_COUNT_BUDGET) -> int:
    """Exact number of r-subsets of the family that are pairwise disjoint.

    Backtracking in rank order with a running-union mask; every node of the
    search is one unit of budget and exceeding it raises, it never rounds.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    masks = sorted(m.bits for m in family.members)
    count = 0
    nodes = 0
    sz = len(masks)

    def extend(start: int, depth: int, union: int):
        nonlocal count, nodes
        remaining = r - depth
        for i in range(start, sz - remaining + 1):
            m = masks[i]
            if m & union:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"induced_edge_count budget {budget} exhausted at {count} edges")
            if remaining == 1:
                count += 1
            else:
                extend(i + 1, depth + 1, union | m)

    if sz >= r:
        extend(0, 0, 0)
    return count


def trivial_plus_one_edge_count(params: Params, centers: Sequence[int], outside: KSubset,
                                budget: int = INDUCED_COUNT_BUDGET) -> int:
    """Brute-force count of edges inside star_union(centers) + {outside}.

    The outside vertex must avoid all the centers; the count is produced by
    the generic enumerator, not by any closed form.
    """
    if len(centers) != params.r - 1:
        raise ValueError(f"need r-1 = {params.r - 1} centers, got {len(centers)}")
    if outside.n != params.n or outside.k != params.k:
        raise ValueError("outside vertex has the wrong shape")
    qmask = sum(1 << (x - 1) for x in set(centers))
    if outside.bits & qmask:
        raise ValueError(f"{outside} meets the centers {tuple(centers)}; it must lie outside")
    base = star_union(params, centers)
    fam = Family(list(base.members) + [outside])
    return induced_edge_count(fam, params.r, budget=budget)


# ----------------------------------------------------------------------------
# edge enumeration

def enumerate_edges(params: Params, budget: int = EXPLICIT_SAMPLER_BUDGET) -> np.ndarray:
    """All edges as an (m, r) array of ascending rank rows, rows in lex order.

    Raises BudgetExceededError when the total count is over budget; the
    by-count sampler is the way in at that scale.
    """
    total = total_edge_count(params)
    if total > budget:
        raise BudgetExceededError(
            f"{total} edges exceed the explicit budget {budget}; use sample_by_count")
    n, k, r = params.n, params.k, params.r
    masks = vertex_masks(n, k)
    v = len(masks)
    if total == 0:
        return np.empty((0, r), dtype=np.int64)
    if r == 2:
        arr = np.array(masks, dtype=np.uint64)
        chunks = []
        step = max(1, (1 << 22) // max(v, 1))  # keep each block a few MB
        for lo in range(0, v, step):
            hi = min(lo + step, v)
            block = (arr[lo:hi, None] & arr[None, :]) == 0
            a_idx, b_idx = np.nonzero(block)
            a_idx = a_idx + lo
            keep = a_idx < b_idx
            chunks.append(np.stack([a_idx[keep], b_idx[keep]], axis=1))
        rows = np.concatenate(chunks, axis=0).astype(np.int64)
        assert rows.shape[0] == total, "enumeration disagrees with the closed-form edge count"
        return rows
    out = np.empty((total, r), dtype=np.int64)
    row = np.empty(r, dtype=np.int64)
    pos = 0

    def extend(start: int, depth: int, union: int):
        nonlocal pos
        remaining = r - depth
        for i in range(start, v - remaining + 1):
            m = masks[i]
            if m & union:
                continue
            row[depth] = i
            if remaining == 1:
                out[pos] = row
                pos += 1
            else:
                extend(i + 1, depth + 1, union | m)

    extend(0, 0, 0)
    assert pos == total, "enumeration disagrees with the closed-form edge count"
    return out


# ----------------------------------------------------------------------------
# sampled hypergraphs

class SampledHypergraph:
    """An immutable retained-edge set of KG^r_{n,k}(p).

    retained is an (m, r) int64 array, each row ascending, rows sorted
    lexicographically; treat instances as frozen after construction.
    """

    def __init__(self, params: Params, p: float, seed: int, sampler_kind: str,
                 retained: np.ndarray):
        retained = np.asarray(retained, dtype=np.int64).reshape(-1, params.r)
        order = np.lexsort(retained.T[::-1])
        self.params = params
        self.p = float(p)
        self.seed = int(seed)
        self.sampler_kind = sampler_kind
        self.retained = retained[order]
        self._edge_set: Optional[frozenset] = None
        self._adjacency = None
        self._adjacency_ints: Optional[list] = None
        self._incidence: Optional[list] = None

    @property
    def num_vertices(self) -> int:
        return binomial(self.params.n, self.params.k)

    @property
    def num_retained(self) -> int:
        return int(self.retained.shape[0])

    def edge_set(self) -> frozenset:
        if self._edge_set is None:
            self._edge_set = frozenset(map(tuple, self.retained.tolist()))
        return self._edge_set

    def adjacency_words(self) -> np.ndarray:
        """r = 2 only: (V, ceil(V/64)) uint64 bitset rows of retained neighbours."""
        if self.params.r != 2:
            raise ValueError("adjacency is a pair-edge view; r must be 2")
        if self._adjacency is None:
            v = self.num_vertices
            words = (v + 63) // 64
            adj = np.zeros((v, words), dtype=np.uint64)
            if self.num_retained:
                a = self.retained[:, 0]
                b = self.retained[:, 1]
                one = np.uint64(1)
                np.bitwise_or.at(adj, (a, b >> 6), one << (b & 63).astype(np.uint64))
                np.bitwise_or.at(adj, (b, a >> 6), one << (a & 63).astype(np.uint64))
            self._adjacency = adj
        return self._adjacency

    def adjacency_masks(self) -> list:
        """r = 2 only: per-vertex python-int bitmask of retained neighbours."""
        if self._adjacency_ints is None:
            words = self.adjacency_words()
            nw = words.shape[1]
            shifts = [64 * w for w in range(nw)]
            self._adjacency_ints = [
                sum(int(row[w]) << shifts[w] for w in range(nw))
                for row in words
            ]
        return self._adjacency_ints

    def incidence_lists(self) -> list:
        """Per-vertex list of retained edge indices."""
        if self._incidence is None:
            inc = [[] for _ in range(self.num_vertices)]
            for j, row in enumerate(self.retained.tolist()):
                for vtx in row:
                    inc[vtx].append(j)
            self._incidence = inc
        return self._incidence

    def edges(self) -> list[Edge]:
        n, k = self.params.n, self.params.k
        return [Edge(tuple(row), n, k) for row in self.retained.tolist()]

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "p": self.p,
            "seed": self.seed,
            "sampler_kind": self.sampler_kind,
            "retained": self.retained.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, d: dict) -> "SampledHypergraph":
        params = Params(**d["params"])
        return cls(params, d["p"], d["seed"], d["sampler_kind"],
                   np.array(d["retained"], dtype=np.int64).reshape(-1, params.r))

    @classmethod
    def from_json(cls, s: str) -> "SampledHypergraph":
        return cls.from_json_dict(json.loads(s))


def sample_explicit(params: Params, p: float, seed: int,
                    budget: int = EXPLICIT_SAMPLER_BUDGET) -> SampledHypergraph:
    """Keep each edge independently iff its keyed uniform is below p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    edges = enumerate_edges(params, budget=budget)
    if edges.shape[0] == 0 or p == 0.0:
        retained = np.empty((0, params.r), dtype=np.int64)
    elif p == 1.0:
        retained = edges
    else:
        u = _streams.uniforms_for_rows(seed, _streams.DOMAIN_EDGE, edges)
        retained = edges[u < p]
    return SampledHypergraph(params, p, seed, "explicit", retained)


def sample_uniform_edge(params: Params, rng: np.random.Generator) -> Edge:
    """One edge uniform over all edges, built a member at a time.

    Each successive member is a uniform k-subset of the elements still
    unused; the number of completions of a partial edge depends only on how
    many members are placed, so after canonical sorting the draw is uniform.
    """
    n, k, r = params.n, params.k, params.r
    if n < r * k:
        raise ValueError(f"no edges: need n >= rk, got n={n}, rk={r * k}")
    used_mask = 0
    masks = []
    for i in range(r):
        free = [e for e in range(1, n + 1) if not used_mask >> (e - 1) & 1]
        m = n - i * k
        idx = int(rng.integers(binomial(m, k)))
        picked = _unrank_elements(m, k, idx)
        mask = 0
        for pos in picked:
            mask |= 1 << (free[pos - 1] - 1)
        used_mask |= mask
        masks.append(mask)
    return Edge(_edge_key_from_masks(n, k, masks), n, k)


def sample_by_count(params: Params, p: float, seed: int) -> SampledHypergraph:
    """Draw m ~ Binomial(|E|, p) exactly, then m distinct uniform edges."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    total = total_edge_count(params)
    rng = _streams.generator_for(seed, _streams.DOMAIN_GENERATOR)
    m = _streams.binomial_variate(rng, total, p) if total else 0
    chosen: set[tuple[int, ...]] = set()
    rejections = 0
    while len(chosen) < m:
        e = sample_uniform_edge(params, rng)
        if e.key in chosen:
            rejections += 1
            if rejections >= DUPLICATE_REJECTION_CAP:
                raise RuntimeError(
                    f"{rejections} consecutive duplicate rejections; "
                    f"retained fraction too close to the full edge set")
            continue
        rejections = 0
        chosen.add(e.key)
    retained = (np.array(sorted(chosen), dtype=np.int64)
                if chosen else np.empty((0, params.r), dtype=np.int64))
    return SampledHypergraph(params, p, seed, "by_count", retained)


def make_sample(params: Params, p: float, seed: int, sampler_kind: str = "explicit",
                budget: int = EXPLICIT_SAMPLER_BUDGET) -> SampledHypergraph:
    if sampler_kind == "explicit":
        return sample_explicit(params, p, seed, budget=budget)
    if sampler_kind == "by_count":
        return sample_by_count(params, p, seed)
    raise ValueError(f"unknown sampler_kind {sampler_kind!r}")


def retained_edges_within(sample: SampledHypergraph, family: Family) -> list[Edge]:
    """The retained edges all of whose members lie in the family."""
    if family.n != sample.params.n or (len(family) and family.k != sample.params.k):
        raise ValueError("family shape does not match the sample")
    lookup = rank_of_mask(sample.params.n, sample.params.k)
    member = np.zeros(sample.num_vertices, dtype=bool)
    for m in family.members:
        member[lookup[m.bits]] = True
    if sample.num_retained == 0:
        return []
    inside = member[sample.retained].all(axis=1)
    n, k = sample.params.n, sample.params.k
    return [Edge(tuple(row), n, k) for row in sample.retained[inside].tolist()]
