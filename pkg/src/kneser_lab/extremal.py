"""Lexicographic initial families, edge-count minimality checks, and the
classical p = 1 oracles.

The minimality verifier enumerates every family of the requested size when
that count fits the budget, otherwise it samples families with a seeded
generator and says so in the report.  Nothing here asserts a theorem: each
report records what the enumeration found together with the hypothesis
flags, and disagreement outside a hypothesis regime is data, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import _streams, model, solver
from .core import (
    BudgetExceededError,
    Family,
    Params,
    binomial,
    emc_value,
    lex_unrank,
    star_union_size,
)

EXHAUSTIVE_FAMILY_BUDGET = 10**7
DEFAULT_SAMPLED_FAMILIES = 20_000
MAXIMA_ENUM_BUDGET = 10**7


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of comparing the lex-initial family against all (or sampled)
    same-size families by induced edge count."""

    n: int
    k: int
    r: int
    s: int
    lex_edges: int
    min_edges: int
    min_attained_by_lex: bool
    families_enumerated: int
    partial: bool
    l: int
    regime_satisfied: Optional[bool]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "r": self.r, "s": self.s,
            "lex_edges": self.lex_edges,
            "min_edges": self.min_edges,
            "min_attained_by_lex": self.min_attained_by_lex,
            "families_enumerated": self.families_enumerated,
            "partial": self.partial,
            "l": self.l,
            "regime_satisfied": self.regime_satisfied,
        }


@dataclass(frozen=True)
class EkrReport:
    n: int
    k: int
    alpha: int
    star_size: int
    matches: bool
    all_maximum_trivial: Optional[bool]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k,
            "alpha": self.alpha,
            "star_size": self.star_size,
            "matches": self.matches,
            "all_maximum_trivial": self.all_maximum_trivial,
        }


@dataclass(frozen=True)
class EmcReport:
    n: int
    k: int
    r: int
    alpha: int
    conjectured_value: int
    attained_by: str
    matches_conjecture: bool
    in_frankl_regime: bool
    in_emc_regime: bool
    all_maximum_trivial: Optional[bool]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "r": self.r,
            "alpha": self.alpha,
            "conjectured_value": self.conjectured_value,
            "attained_by": self.attained_by,
            "matches_conjecture": self.matches_conjecture,
            "in_frankl_regime": self.in_frankl_regime,
            "in_emc_regime": self.in_emc_regime,
            "all_maximum_trivial": self.all_maximum_trivial,
        }


def lex_initial_family(n: int, k: int, s: int) -> Family:
    """The s lex-smallest k-subsets of {1..n}."""
    if not 1 <= s <= binomial(n, k):
        raise ValueError(f"s must be in 1..C({n},{k}), got {s}")
    return Family([lex_unrank(n, k, i) for i in range(s)], n=n, k=k)


def star_count_parameter(n: int, k: int, s: int) -> int:
    """Minimal l with s <= C(n,k) - C(n-l,k): how many stars it takes to
    cover a size-s lex prefix."""
    total = binomial(n, k)
    if not 1 <= s <= total:
        raise ValueError(f"s must be in 1..C({n},{k}), got {s}")
    for l in range(1, n + 1):
        if s <= total - binomial(n - l, k):
            return l
    raise AssertionError("unreachable: s <= C(n,k) guarantees l <= n")


def _edge_rank_masks(params: Params, budget: int) -> list[int]:
    rows = model.enumerate_edges(params, budget=budget)
    out = []
    for row in rows.tolist():
        m = 0
        for v in row:
            m |= 1 << v
        out.append(m)
    return out


def verify_lex_minimality(n: int, k: int, r: int, s: int,
                          exhaustive_budget: int = EXHAUSTIVE_FAMILY_BUDGET,
                          sampled_families: int = DEFAULT_SAMPLED_FAMILIES,
                          seed: int = 0) -> MinimalityReport:
    """Does the lex prefix of size s minimize the induced edge count?

    Exhaustive over all C(V, s) families when that fits exhaustive_budget;
    otherwise a seeded sample of families, reported as partial.  The lex
    family's count is computed by the member-level enumerator and re-checked
    against the bitmask route used for the sweep over families.
    """
    params = Params(n=n, k=k, r=r)
    nvert = binomial(n, k)
    if not 1 <= s <= nvert:
        raise ValueError(f"s must be in 1..C({n},{k}), got {s}")

    lex_fam = lex_initial_family(n, k, s)
    lex_edges = model.induced_edge_count(lex_fam, r)

    # exhaustive_budget caps the family sweep, not the edge listing
    emasks = _edge_rank_masks(params, budget=model.EXPLICIT_SAMPLER_BUDGET)

    def count_for_mask(fmask: int) -> int:
        c = 0
        for em in emasks:
            if em & ~fmask == 0:
                c += 1
        return c

    lex_mask = (1 << s) - 1
    cross = count_for_mask(lex_mask)
    assert cross == lex_edges, "edge-count routes disagree on the lex family"

    total_families = binomial(nvert, s)
    if total_families <= exhaustive_budget:
        best = lex_edges
        seen = 0
        for combo in combinations(range(nvert), s):
            fmask = 0
            for v in combo:
                fmask |= 1 << v
            c = count_for_mask(fmask)
            if c < best:
                best = c
            seen += 1
        partial = False
    else:
        rng = _streams.generator_for(seed, _streams.DOMAIN_GENERATOR, n, k, r, s)
        best = lex_edges
        for _ in range(sampled_families):
            picks = rng.choice(nvert, size=s, replace=False)
            fmask = 0
            for v in picks.tolist():
                fmask |= 1 << v
            c = count_for_mask(fmask)
            if c < best:
                best = c
        seen = sampled_families + 1
        partial = True

    l = star_count_parameter(n, k, s)
    regime: Optional[bool] = n > 108 * k * k * (l + k) if r == 2 else None
    return MinimalityReport(
        n=n, k=k, r=r, s=s,
        lex_edges=lex_edges,
        min_edges=best,
        min_attained_by_lex=lex_edges == best,
        families_enumerated=seen,
        partial=partial,
        l=l,
        regime_satisfied=regime,
    )


def corollary_lower_bound(n: int, k: int, q: int, m: int) -> int:
    """m * prod_{i=1}^{q-1} C(n - ik - q + i, k - 1): the floor on induced
    edges for a family of size N_1 + ... + N_{q-1} + m."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 1 <= m <= binomial(n - q, k - 1):
        raise ValueError(f"m must be in 1..C({n - q},{k - 1}), got {m}")
    out = m
    for i in range(1, q):
        out *= binomial(n - i * k - q + i, k - 1)
    return out


def check_corollary_on_lex(n: int, k: int, q: int, m: int,
                           budget: int = EXHAUSTIVE_FAMILY_BUDGET) -> bool:
    """True iff the lex family of size N_1+...+N_{q-1}+m has at least the
    corollary's edge count in the q-uniform model."""
    s = sum(binomial(n - i, k - 1) for i in range(1, q)) + m
    if s > binomial(n, k):
        raise ValueError(f"family size {s} exceeds C({n},{k})")
    fam = lex_initial_family(n, k, s)
    got = model.induced_edge_count(fam, q, budget=budget)
    return got >= corollary_lower_bound(n, k, q, m)


def _all_maximum_trivial(sample: model.SampledHypergraph, alpha: int,
                         budget: int) -> Optional[bool]:
    """True/False when the enumeration finished, None past the budget.

    Only meaningful at alpha == N: a trivial family has exactly that size,
    so any other alpha makes every maximum nontrivial by definition.
    """
    if alpha != star_union_size(sample.params):
        return False
    dec = solver.exists_nontrivial_independent_of_size(sample, alpha, budget=budget)
    if dec.found is None:
        return None
    return not dec.found


def ekr_oracle(n: int, k: int, solver_budget: int = solver.DEFAULT_NODE_BUDGET,
               maxima_budget: int = MAXIMA_ENUM_BUDGET) -> EkrReport:
    """Exact alpha of the full pair model vs the star size C(n-1,k-1), plus an
    exhaustive is-every-maximum-a-star check at small scale."""
    params = Params(n=n, k=k, r=2)
    sample = model.make_sample(params, p=1.0, seed=0)
    res = solver.max_independent_set(sample, budget=solver_budget)
    if res.status != solver.STATUS_EXACT:
        raise BudgetExceededError(
            f"alpha search exceeded {solver_budget} nodes at (n,k)=({n},{k})")
    star_size = binomial(n - 1, k - 1)
    trivial = _all_maximum_trivial(sample, res.alpha, maxima_budget)
    return EkrReport(n=n, k=k, alpha=res.alpha, star_size=star_size,
                     matches=res.alpha == star_size,
                     all_maximum_trivial=trivial)


def emc_oracle(n: int, k: int, r: int,
               solver_budget: int = solver.DEFAULT_NODE_BUDGET,
               maxima_budget: int = MAXIMA_ENUM_BUDGET) -> EmcReport:
    """Exact alpha at p = 1 against the conjectured max{C(rk-1,k), N}.

    Works from n >= rk - 1 (below rk there are no edges and alpha is the
    whole vertex set, which is what the restricted-ground value predicts).
    """
    if n < r * k - 1:
        raise ValueError(f"need n >= rk - 1 = {r * k - 1}, got {n}")
    params = Params(n=n, k=k, r=r)
    sample = model.make_sample(params, p=1.0, seed=0)
    res = solver.max_independent_set(sample, budget=solver_budget)
    if res.status != solver.STATUS_EXACT:
        raise BudgetExceededError(
            f"alpha search exceeded {solver_budget} nodes at (n,k,r)=({n},{k},{r})")
    conj = emc_value(params)
    trivial = _all_maximum_trivial(sample, res.alpha, maxima_budget)
    return EmcReport(n=n, k=k, r=r, alpha=res.alpha,
                     conjectured_value=conj.value,
                     attained_by=conj.attained_by,
                     matches_conjecture=res.alpha == conj.value,
                     in_frankl_regime=params.frankl_regime,
                     in_emc_regime=params.emc_regime,
                     all_maximum_trivial=trivial)
