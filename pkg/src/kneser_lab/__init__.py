"""Exact and Monte Carlo tooling for random Kneser hypergraphs.

Vertices are the k-subsets of {1..n}; edges are r-tuples of pairwise
disjoint vertices; the random model keeps each edge independently with
probability p.  The package computes the closed-form quantities around the
independence threshold, samples reproducibly, solves small instances
exactly, and sweeps the alpha = N transition empirically.
"""

from .core import (
    BudgetExceededError,
    DerivedQuantities,
    EmcValue,
    Family,
    KSubset,
    OutOfRegimeError,
    Params,
    binomial,
    derive,
    emc_value,
    expected_trivial_plus_one,
    hilton_milner_bound,
    lex_compare,
    lex_rank,
    lex_unrank,
    log_binomial,
    p_critical,
    star_increments,
    star_overlap,
    star_union_size,
    total_edge_count,
    trivial_plus_one_edges_count,
)
from .experiments import (
    SweepConfig,
    SweepResult,
    TrialRecord,
    coupled_monotonicity_check,
    run_trial,
    threshold_sweep,
    verify_suite,
    wilson_interval,
    y_statistic,
)
from .extremal import (
    EkrReport,
    EmcReport,
    MinimalityReport,
    check_corollary_on_lex,
    corollary_lower_bound,
    ekr_oracle,
    emc_oracle,
    lex_initial_family,
    verify_lex_minimality,
)
from .model import (
    Edge,
    SampledHypergraph,
    enumerate_edges,
    induced_edge_count,
    make_sample,
    retained_edges_within,
    sample_by_count,
    sample_explicit,
    sample_uniform_edge,
    star,
    star_union,
    trivial_plus_one_edge_count,
)
from .solver import (
    Classification,
    DecisionResult,
    HittingSetResult,
    SolveResult,
    classify_family,
    enumerate_independent_sets_of_size,
    exists_independent_of_size,
    exists_nontrivial_independent_of_size,
    is_independent,
    is_trivial_union,
    max_independent_set,
    min_hitting_set,
)

__all__ = [
    "BudgetExceededError",
    "Classification",
    "DecisionResult",
    "DerivedQuantities",
    "Edge",
    "EkrReport",
    "EmcReport",
    "EmcValue",
    "Family",
    "HittingSetResult",
    "KSubset",
    "MinimalityReport",
    "OutOfRegimeError",
    "Params",
    "SampledHypergraph",
    "SolveResult",
    "SweepConfig",
    "SweepResult",
    "TrialRecord",
    "binomial",
    "check_corollary_on_lex",
    "classify_family",
    "corollary_lower_bound",
    "coupled_monotonicity_check",
    "derive",
    "ekr_oracle",
    "emc_oracle",
    "emc_value",
    "enumerate_edges",
    "enumerate_independent_sets_of_size",
    "exists_independent_of_size",
    "exists_nontrivial_independent_of_size",
    "expected_trivial_plus_one",
    "hilton_milner_bound",
    "induced_edge_count",
    "is_independent",
    "is_trivial_union",
    "lex_compare",
    "lex_initial_family",
    "lex_rank",
    "lex_unrank",
    "log_binomial",
    "make_sample",
    "max_independent_set",
    "min_hitting_set",
    "p_critical",
    "retained_edges_within",
    "run_trial",
    "sample_by_count",
    "sample_explicit",
    "sample_uniform_edge",
    "star",
    "star_increments",
    "star_overlap",
    "star_union",
    "star_union_size",
    "threshold_sweep",
    "total_edge_count",
    "trivial_plus_one_edge_count",
    "trivial_plus_one_edges_count",
    "verify_lex_minimality",
    "verify_suite",
    "wilson_interval",
    "y_statistic",
]

__version__ = "0.1.0"
