"""Exact subset arithmetic and closed-form quantities for Kneser hypergraphs.

Ground sets are {1..n} with n <= 64 so a k-subset fits in one machine word
(element i lives at bit i-1).  Everything here is pure and exact: binomials
are arbitrary-precision integers, and the derived quantities carry
natural-log copies for ratio work at sizes where floats would overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional

MAX_GROUND_SET = 64


class BudgetExceededError(RuntimeError):
    """An exact enumeration hit its work budget; no approximate answer is substituted."""


class OutOfRegimeError(ValueError):
    """Parameters fall outside the regime where the requested quantity is defined."""


# ----------------------------------------------------------------------------
# binomials

def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n >= 0 and k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k) via lgamma.

    Unlike binomial() this is a partial function: k > n (or any negative
    argument) is a domain error because log 0 has no float home.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"log_binomial needs 0 <= k <= n, got ({n}, {k})")
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


# ----------------------------------------------------------------------------
# k-subsets as bitmasks

@total_ordering
@dataclass(frozen=True)
class KSubset:
    """A k-element subset of {1..n}, element i stored at bit i-1.

    The order used everywhere is "prefer smaller elements": A < B iff the
    smallest element of the symmetric difference lies in A.  On bitmasks
    that is a single XOR and lowest-set-bit test.
    """

    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}")
        if self.bits <= 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} not a nonempty subset of {{1..{self.n}}}")
        if 2 * self.k > self.n:
            raise ValueError(f"need 2k <= n for Kneser work, got k={self.k}, n={self.n}")

    @property
    def k(self) -> int:
        return self.bits.bit_count()

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "KSubset":
        bits = 0
        for e in elements:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside 1..{n}")
            if bits >> (e - 1) & 1:
                raise ValueError(f"repeated element {e}")
            bits |= 1 << (e - 1)
        return cls(bits, n)

    def elements(self) -> tuple[int, ...]:
        b = self.bits
        out = []
        while b:
            low = b & -b
            out.append(low.bit_length())
            b ^= low
        return tuple(out)

    def __lt__(self, other: "KSubset") -> bool:
        return lex_compare(self, other) < 0

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements())) + "}"


def _check_same_shape(a: KSubset, b: KSubset):
    if a.n != b.n or a.k != b.k:
        raise ValueError(f"mismatched subsets: ({a.n},{a.k}) vs ({b.n},{b.k})")


def lex_compare(a: KSubset, b: KSubset) -> int:
    """-1, 0, +1 under the prefer-smaller-elements order."""
    _check_same_shape(a, b)
    d = a.bits ^ b.bits
    if d == 0:
        return 0
    return -1 if a.bits & (d & -d) else 1


def are_disjoint(a: KSubset, b: KSubset) -> bool:
    if a.n != b.n:
        raise ValueError(f"mismatched ground sets: {a.n} vs {b.n}")
    return a.bits & b.bits == 0


def lex_rank(s: KSubset) -> int:
    """Position of s in the prefer-smaller-elements enumeration of all C(n,k) subsets."""
    n, k = s.n, s.k
    rank = 0
    prev = 0
    for i, a in enumerate(s.elements(), start=1):
        for x in range(prev + 1, a):
            rank += binomial(n - x, k - i)
        prev = a
    return rank


def _unrank_elements(n: int, k: int, rank: int) -> tuple[int, ...]:
    """Elements of the rank-th k-subset of {1..n}; no Kneser-shape checks."""
    total = binomial(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside [0, {total})")
    out = []
    x = 1
    for i in range(1, k + 1):
        while True:
            block = binomial(n - x, k - i)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def lex_unrank(n: int, k: int, rank: int) -> KSubset:
    """Inverse of lex_rank; rank must lie in [0, C(n,k))."""
    elements = _unrank_elements(n, k, rank)
    bits = 0
    for e in elements:
        bits |= 1 << (e - 1)
    return KSubset(bits, n)


class Family:
    """An ordered, duplicate-free collection of k-subsets over one (n, k).

    An empty family is allowed but must then be given n and k explicitly.
    """

    __slots__ = ("members", "n", "k")

    def __init__(self, members: Iterable[KSubset], n: Optional[int] = None, k: Optional[int] = None):
        members = tuple(members)
        if members:
            n, k = members[0].n, members[0].k
            seen = set()
            for m in members:
                if m.n != n or m.k != k:
                    raise ValueError(f"mixed shapes in family: ({m.n},{m.k}) vs ({n},{k})")
                if m.bits in seen:
                    raise ValueError(f"duplicate member {m}")
                seen.add(m.bits)
        elif n is None or k is None:
            raise ValueError("empty family needs explicit n and k")
        self.members = members
        self.n = n
        self.k = k

    @classmethod
    def from_element_lists(cls, n: int, lists: Iterable[Iterable[int]], k: Optional[int] = None) -> "Family":
        return cls([KSubset.from_elements(el, n) for el in lists], n=n, k=k)

    def to_element_lists(self) -> list[list[int]]:
        return [list(m.elements()) for m in self.members]

    def ranks(self) -> tuple[int, ...]:
        return tuple(lex_rank(m) for m in self.members)

    def bits_set(self) -> frozenset[int]:
        return frozenset(m.bits for m in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s: KSubset) -> bool:
        return any(m.bits == s.bits and m.n == s.n for m in self.members)

    def __repr__(self):
        return f"Family(n={self.n}, k={self.k}, size={len(self.members)})"


# ----------------------------------------------------------------------------
# parameter triple and derived quantities

@dataclass(frozen=True)
class Params:
    """The (n, k, r) triple: k-subsets of {1..n}, edges are r disjoint ones."""

    n: int
    k: int
    r: int

    def __post_init__(self):
        if self.k < 2 or self.r < 2:
            raise ValueError(f"need k >= 2 and r >= 2, got k={self.k}, r={self.r}")
        if self.n < 2 * self.k:
            raise ValueError(f"need n >= 2k, got n={self.n}, k={self.k}")
        if self.n > MAX_GROUND_SET:
            raise ValueError(f"n capped at {MAX_GROUND_SET} (bitmask width), got {self.n}")

    @property
    def emc_regime(self) -> bool:
        # n >= r(k + 1/2), kept in integers
        return 2 * self.n >= self.r * (2 * self.k + 1)

    @property
    def frankl_regime(self) -> bool:
        return self.n >= (2 * self.r - 1) * self.k - self.r + 1

    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r}


def star_union_size(params: Params) -> int:
    """Number of k-subsets meeting a fixed (r-1)-set: C(n,k) - C(n-r+1,k)."""
    return binomial(params.n, params.k) - binomial(params.n - params.r + 1, params.k)


def star_increments(params: Params) -> tuple[int, ...]:
    """C(n-i, k-1) for i = 1..r-1; the i-th star's new members, telescoping to the union size."""
    n, k = params.n, params.k
    return tuple(binomial(n - i, k - 1) for i in range(1, params.r))


def trivial_plus_one_edges_count(params: Params) -> int:
    """Edges inside S_Q plus one outside vertex: prod_{i=1..r-1} C(n-ik-(r-i), k-1)."""
    n, k, r = params.n, params.k, params.r
    out = 1
    for i in range(1, r):
        out *= binomial(n - i * k - (r - i), k - 1)
    return out


def star_overlap(params: Params) -> int:
    """How many members of a star a fixed outside k-subset meets: C(n-1,k-1) - C(n-k-1,k-1)."""
    n, k = params.n, params.k
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1)


def total_edge_count(params: Params) -> int:
    """Number of r-tuples of pairwise disjoint k-subsets, unordered: prod C(n-ik,k) / r!."""
    n, k, r = params.n, params.k, params.r
    if n < r * k:
        return 0
    num = 1
    for i in range(r):
        num *= binomial(n - i * k, k)
    q, rem = divmod(num, math.factorial(r))
    assert rem == 0, "ordered tuple count must divide by r!"
    return q


def p_critical(params: Params) -> float:
    """ln(C(n,r-1) * C(n-r+1,k)) / M, computed in the log domain.

    May exceed 1 at small n; callers decide what to do with that (sweeps cap
    their grids, reports carry a flag).
    """
    if not params.emc_regime:
        raise OutOfRegimeError(f"p_critical needs n >= r(k + 1/2); got {params}")
    n, k, r = params.n, params.k, params.r
    num = log_binomial(n, r - 1) + log_binomial(n - r + 1, k)
    return num / trivial_plus_one_edges_count(params)


def expected_trivial_plus_one(params: Params, p: float) -> float:
    """E[Y] = C(n,r-1) * C(n-r+1,k) * (1-p)^M, evaluated in the log domain."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    n, k, r = params.n, params.k, params.r
    pairs = binomial(n, r - 1) * binomial(n - r + 1, k)
    m = trivial_plus_one_edges_count(params)
    if m == 0 or p == 0.0:
        return float(pairs)
    if p == 1.0:
        return 0.0
    log_val = math.log(pairs) + m * math.log1p(-p)
    try:
        return math.exp(log_val)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class EmcValue:
    value: int
    attained_by: str  # "star_union" or "restricted_ground"


def emc_value(params: Params) -> EmcValue:
    """max{C(rk-1,k), C(n,k) - C(n-r+1,k)}, the conjectured independence number.

    Defined for n >= rk - 1; ties report star_union.
    """
    n, k, r = params.n, params.k, params.r
    if n < r * k - 1:
        raise OutOfRegimeError(f"emc_value needs n >= rk - 1, got n={n}, rk-1={r * k - 1}")
    a = binomial(r * k - 1, k)
    b = star_union_size(params)
    if b >= a:
        return EmcValue(b, "star_union")
    return EmcValue(a, "restricted_ground")


def hilton_milner_bound(n: int, k: int) -> int:
    """Max size of an intersecting k-family with empty common intersection, n > 2k."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n <= 2 * k:
        raise OutOfRegimeError(f"hilton_milner_bound needs n > 2k, got n={n}, k={k}")
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


@dataclass(frozen=True)
class DerivedQuantities:
    """Closed-form counts for one (n, k, r), with log copies for ratio work."""

    params: Params
    num_vertices: int
    trivial_size: int
    star_increments: tuple[int, ...]
    trivial_plus_one_edges: int
    star_overlap: int
    total_edges: int
    p_critical: Optional[float]       # None when the regime does not define it
    p_critical_exceeds_one: bool
    log_num_vertices: float
    log_trivial_size: float
    log_trivial_plus_one_edges: float
    log_star_overlap: float
    log_total_edges: float

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "emc_regime": self.params.emc_regime,
            "frankl_regime": self.params.frankl_regime,
            "num_vertices": self.num_vertices,
            "trivial_size": self.trivial_size,
            "star_increments": list(self.star_increments),
            "trivial_plus_one_edges": self.trivial_plus_one_edges,
            "star_overlap": self.star_overlap,
            "total_edges": self.total_edges,
            "p_critical": self.p_critical,
            "p_critical_exceeds_one": self.p_critical_exceeds_one,
            "log_num_vertices": self.log_num_vertices,
            "log_trivial_size": self.log_trivial_size,
            "log_trivial_plus_one_edges": self.log_trivial_plus_one_edges,
            "log_star_overlap": self.log_star_overlap,
            "log_total_edges": self.log_total_edges,
        }


def derive(params: Params) -> DerivedQuantities:
    """All derived quantities at once; every count exact, logs via the integers."""
    v = binomial(params.n, params.k)
    triv = star_union_size(params)
    incs = star_increments(params)
    m = trivial_plus_one_edges_count(params)
    h = star_overlap(params)
    te = total_edge_count(params)
    if params.emc_regime:
        pc = p_critical(params)
        exceeds = pc > 1.0
    else:
        pc, exceeds = None, False
    return DerivedQuantities(
        params=params,
        num_vertices=v,
        trivial_size=triv,
        star_increments=incs,
        trivial_plus_one_edges=m,
        star_overlap=h,
        total_edges=te,
        p_critical=pc,
        p_critical_exceeds_one=exceeds,
        log_num_vertices=math.log(v),
        log_trivial_size=math.log(triv),
        log_trivial_plus_one_edges=math.log(m) if m else -math.inf,
        log_star_overlap=math.log(h),
        log_total_edges=math.log(te) if te else -math.inf,
    )
