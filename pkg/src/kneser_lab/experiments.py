"""Monte Carlo engine: Y statistics, per-trial alpha decisions, threshold
sweeps over a p grid, the coupled monotonicity check, and the one-shot
verification battery.

Reproducibility contract: every trial owns a seed derived from the master
seed and its (p_index, trial_index) coordinates, aggregation is an ordered
reduction over those coordinates, and no code path reads the clock, so a
sweep's serialized output is byte-identical for any thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import _streams, extremal, model, solver
from .core import (
    KSubset,
    Params,
    binomial,
    derive,
    expected_trivial_plus_one,
    star_union_size,
    total_edge_count,
    trivial_plus_one_edges_count,
)

Z95 = 1.96

MODES = ("alpha", "y_only", "both")
SAMPLER_KINDS = ("explicit", "by_count")

STATUS_ALPHA_EQ = "alpha_eq_N"
STATUS_ALPHA_GT = "alpha_gt_N"
STATUS_BUDGET = "budget"
STATUS_Y_ONLY = "y_only"

# seam for the negative-control check: the M-oracle compares the brute-force
# edge count against this reference, which a test fixture can tamper with
_m_reference = trivial_plus_one_edges_count


def wilson_interval(successes: int, total: int, z: float = Z95) -> tuple[float, float]:
    """95% score interval for a binomial proportion."""
    if total <= 0:
        raise ValueError("total must be positive")
    if not 0 <= successes <= total:
        raise ValueError("successes must lie in 0..total")
    phat = successes / total
    denom = 1.0 + z * z / total
    center = (phat + z * z / (2 * total)) / denom
    half = z * math.sqrt(phat * (1 - phat) / total + z * z / (4 * total * total)) / denom
    return max(0.0, center - half), min(1.0, center + half)


# ----------------------------------------------------------------------------
# configuration

@dataclass(frozen=True)
class SweepConfig:
    params: Params
    p_grid: tuple
    trials_per_p: int
    master_seed: int
    sampler_kind: str = "explicit"
    solver_budget: int = solver.DEFAULT_NODE_BUDGET
    mode: str = "both"

    def __post_init__(self):
        grid = tuple(float(p) for p in self.p_grid)
        object.__setattr__(self, "p_grid", grid)
        if not grid:
            raise ValueError("p_grid must be non-empty")
        for p in grid:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"grid probability {p} outside [0,1]")
        if any(a >= b for a, b in zip(grid, grid[1:])):
            raise ValueError("p_grid must be strictly ascending")
        if self.trials_per_p < 1:
            raise ValueError("trials_per_p must be >= 1")
        if self.sampler_kind not in SAMPLER_KINDS:
            raise ValueError(f"sampler_kind must be one of {SAMPLER_KINDS}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.solver_budget < 1:
            raise ValueError("solver_budget must be >= 1")
        if not 0 <= self.master_seed < 1 << 64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "p_grid": list(self.p_grid),
            "trials_per_p": self.trials_per_p,
            "master_seed": self.master_seed,
            "sampler_kind": self.sampler_kind,
            "solver_budget": self.solver_budget,
            "mode": self.mode,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SweepConfig":
        if not isinstance(d, dict):
            raise ValueError("config must be a JSON object")
        allowed = {"params", "p_grid", "trials_per_p", "master_seed",
                   "sampler_kind", "solver_budget", "mode"}
        unknown = set(d) - allowed
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for key in ("params", "p_grid", "trials_per_p", "master_seed"):
            if key not in d:
                raise ValueError(f"config missing required key {key!r}")
        pd = d["params"]
        if not isinstance(pd, dict):
            raise ValueError("params must be a JSON object")
        punknown = set(pd) - {"n", "k", "r"}
        if punknown:
            raise ValueError(f"unknown params keys: {sorted(punknown)}")
        for key in ("n", "k", "r"):
            if key not in pd:
                raise ValueError(f"params missing required key {key!r}")
        kwargs = {
            "params": Params(n=pd["n"], k=pd["k"], r=pd["r"]),
            "p_grid": tuple(d["p_grid"]),
            "trials_per_p": d["trials_per_p"],
            "master_seed": d["master_seed"],
        }
        for key in ("sampler_kind", "solver_budget", "mode"):
            if key in d:
                kwargs[key] = d[key]
        return cls(**kwargs)


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    status: str
    alpha: Optional[int]  # censored at N+1; None on budget or y_only
    y: Optional[int]
    num_retained: int
    solver_nodes: int

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "status": self.status,
            "alpha": self.alpha,
            "y": self.y,
            "num_retained": self.num_retained,
            "solver_nodes": self.solver_nodes,
        }


# ----------------------------------------------------------------------------
# Y statistic

def _y_count_and_witness(sample: model.SampledHypergraph):
    """Count pairs (centers Q, outside vertex A) whose star union plus A spans
    no retained edge; also return one witness family.

    Any edge inside S_Q u {A} must contain A (pigeonhole on the centers), so
    only A's retained edges are consulted.
    """
    params = sample.params
    n, r = params.n, params.r
    stars = solver._star_rank_masks(n, params.k)
    nvert = sample.num_vertices
    allmask = (1 << nvert) - 1
    count = 0
    witness = None

    if r == 2:
        adj = sample.adjacency_masks()
        for x in range(1, n + 1):
            smask = stars[x]
            outside = allmask & ~smask
            while outside:
                low = outside & -outside
                a = low.bit_length() - 1
                outside ^= low
                if adj[a] & smask == 0:
                    count += 1
                    if witness is None:
                        witness = ((x,), a)
        return count, witness

    other = [[] for _ in range(nvert)]
    for row in sample.retained.tolist():
        em = 0
        for v in row:
            em |= 1 << v
        for v in row:
            other[v].append(em & ~(1 << v))
    for q in combinations(range(1, n + 1), r - 1):
        smask = 0
        for x in q:
            smask |= stars[x]
        outside = allmask & ~smask
        while outside:
            low = outside & -outside
            a = low.bit_length() - 1
            outside ^= low
            good = True
            for om in other[a]:
                if om & ~smask == 0:
                    good = False
                    break
            if good:
                count += 1
                if witness is None:
                    witness = (q, a)
    return count, witness


def _witness_family(sample: model.SampledHypergraph, witness) -> solver.Family:
    q, a = witness
    params = sample.params
    stars = solver._star_rank_masks(params.n, params.k)
    smask = 0
    for x in q:
        smask |= stars[x]
    ranks = solver._mask_to_ranks(smask | (1 << a))
    return solver._family_from_rank_iter(params, ranks)


def y_statistic(sample: model.SampledHypergraph) -> int:
    """Number of (A, Q) pairs with A outside the (r-1)-star union S_Q and
    S_Q u {A} independent in the sample.  Y > 0 exhibits alpha > N."""
    count, _ = _y_count_and_witness(sample)
    return count


# ----------------------------------------------------------------------------
# trials and sweeps

def run_trial(params: Params, p: float, trial_seed: int,
              budget: int = solver.DEFAULT_NODE_BUDGET, mode: str = "both",
              sampler_kind: str = "explicit") -> TrialRecord:
    """One sampled hypergraph; decides the alpha = N event and/or counts Y.

    In mode "both" a positive Y settles the decision for free: its witness is
    an (N+1)-vertex family, re-verified independent here, so the solver only
    runs on Y = 0 trials.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    sample = model.make_sample(params, p, trial_seed, sampler_kind)
    ntriv = star_union_size(params)

    y: Optional[int] = None
    witness = None
    if mode != "alpha":
        y, witness = _y_count_and_witness(sample)
    if mode == "y_only":
        return TrialRecord(trial_seed, STATUS_Y_ONLY, None, y,
                           sample.num_retained, 0)
    if y is not None and y > 0:
        fam = _witness_family(sample, witness)
        if len(fam) != ntriv + 1 or not solver.is_independent(sample, fam):
            raise AssertionError("Y witness failed independence verification")
        return TrialRecord(trial_seed, STATUS_ALPHA_GT, ntriv + 1, y,
                           sample.num_retained, 0)
    dec = solver.exists_independent_of_size(sample, ntriv + 1, budget=budget)
    if dec.found is None:
        return TrialRecord(trial_seed, STATUS_BUDGET, None, y,
                           sample.num_retained, dec.nodes_explored)
    if dec.found:
        return TrialRecord(trial_seed, STATUS_ALPHA_GT, ntriv + 1, y,
                           sample.num_retained, dec.nodes_explored)
    return TrialRecord(trial_seed, STATUS_ALPHA_EQ, ntriv, y,
                       sample.num_retained, dec.nodes_explored)


def trial_seed_for(master_seed: int, p_index: int, trial_index: int) -> int:
    return _streams.derive_seed(master_seed, _streams.DOMAIN_TRIAL,
                                p_index, trial_index)


def _sweep_point(config: SweepConfig, p_index: int):
    p = config.p_grid[p_index]
    records = []
    for t in range(config.trials_per_p):
        seed = trial_seed_for(config.master_seed, p_index, t)
        records.append(run_trial(config.params, p, seed,
                                 budget=config.solver_budget, mode=config.mode,
                                 sampler_kind=config.sampler_kind))
    return p_index, records


def _warm_kernel():
    # compile the numba kernel in the parent so forked workers inherit it
    sample = model.make_sample(Params(n=4, k=2, r=2), p=1.0, seed=0)
    solver.exists_independent_of_size(sample, 4, budget=1000)


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    num_vertices: int
    trivial_size: int
    p_critical: Optional[float]
    rows: tuple

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "num_vertices": self.num_vertices,
            "trivial_size": self.trivial_size,
            "p_critical": self.p_critical,
            "rows": [dict(row) for row in self.rows],
        }

    def to_csv(self) -> str:
        cols = ["p", "trials", "n_alpha_eq_N", "frac_success", "wilson_lo",
                "wilson_hi", "mean_alpha", "mean_Y", "expected_Y", "p_over_pc"]

        def cell(value) -> str:
            if value is None:
                return ""
            return repr(value) if isinstance(value, float) else str(value)

        lines = [",".join(cols)]
        for row in self.rows:
            lines.append(",".join(cell(row[c]) for c in cols))
        return "\n".join(lines) + "\n"


def _aggregate_point(config: SweepConfig, p_index: int,
                     records: Sequence[TrialRecord],
                     p_critical: Optional[float]) -> dict:
    p = config.p_grid[p_index]
    trials = len(records)
    row: dict = {"p": p, "p_index": p_index, "trials": trials}
    if config.mode == "y_only":
        row.update(n_alpha_eq_N=None, n_alpha_gt_N=None, n_budget=None,
                   frac_success=None, wilson_lo=None, wilson_hi=None,
                   mean_alpha=None)
    else:
        n_eq = sum(1 for rec in records if rec.status == STATUS_ALPHA_EQ)
        n_gt = sum(1 for rec in records if rec.status == STATUS_ALPHA_GT)
        n_budget = sum(1 for rec in records if rec.status == STATUS_BUDGET)
        assert n_eq + n_gt + n_budget == trials
        decided = trials - n_budget
        alphas = [rec.alpha for rec in records if rec.alpha is not None]
        row["n_alpha_eq_N"] = n_eq
        row["n_alpha_gt_N"] = n_gt
        row["n_budget"] = n_budget
        if decided:
            lo, hi = wilson_interval(n_eq, decided)
            row["frac_success"] = n_eq / decided
            row["wilson_lo"] = lo
            row["wilson_hi"] = hi
            row["mean_alpha"] = sum(alphas) / len(alphas)
        else:
            row.update(frac_success=None, wilson_lo=None, wilson_hi=None,
                       mean_alpha=None)
    if config.mode == "alpha":
        row["mean_Y"] = None
        row["n_Y_positive"] = None
    else:
        ys = [rec.y for rec in records]
        row["mean_Y"] = sum(ys) / trials
        row["n_Y_positive"] = sum(1 for y in ys if y > 0)
    row["expected_Y"] = expected_trivial_plus_one(config.params, p)
    row["p_over_pc"] = None if p_critical is None else p / p_critical
    return row


def threshold_sweep(config: SweepConfig, threads: int = 1) -> SweepResult:
    """trials_per_p trials at every grid point, aggregated into plot-ready
    rows.  Identical bytes for any threads value; threads > 1 fans points out
    to worker processes."""
    if threads < 1:
        raise ValueError("threads must be >= 1")
    quantities = derive(config.params)
    p_critical = quantities.p_critical
    npoints = len(config.p_grid)
    if threads == 1 or npoints == 1:
        collected = [_sweep_point(config, i) for i in range(npoints)]
    else:
        _warm_kernel()
        with ProcessPoolExecutor(max_workers=min(threads, npoints)) as pool:
            futures = [pool.submit(_sweep_point, config, i) for i in range(npoints)]
            collected = [f.result() for f in futures]
    collected.sort(key=lambda pair: pair[0])
    rows = tuple(_aggregate_point(config, i, recs, p_critical)
                 for i, recs in collected)
    return SweepResult(config=config,
                       num_vertices=quantities.num_vertices,
                       trivial_size=quantities.trivial_size,
                       p_critical=p_critical,
                       rows=rows)


def coupled_monotonicity_check(params: Params, p_list: Sequence[float],
                               n_trials: int, master_seed: int,
                               budget: int = solver.DEFAULT_NODE_BUDGET) -> dict:
    """Shared-seed samples across the grid make retained edge sets nested in
    p, so the alpha > N indicator must be non-increasing; any decided pair
    violating that is reported.  Budget-undecided points are skipped."""
    grid = sorted(float(p) for p in p_list)
    ntriv = star_union_size(params)
    violations = []
    n_skipped = 0
    for t in range(n_trials):
        seed = _streams.derive_seed(master_seed, _streams.DOMAIN_COUPLED, t)
        prev_edges: Optional[frozenset] = None
        indicators = []
        for p in grid:
            sample = model.sample_explicit(params, p, seed)
            edges = sample.edge_set()
            if prev_edges is not None and not prev_edges <= edges:
                raise AssertionError("coupled samples lost edge nesting")
            prev_edges = edges
            y, witness = _y_count_and_witness(sample)
            if y > 0:
                fam = _witness_family(sample, witness)
                if not solver.is_independent(sample, fam):
                    raise AssertionError("Y witness failed independence verification")
                indicators.append(True)
                continue
            dec = solver.exists_independent_of_size(sample, ntriv + 1, budget=budget)
            if dec.found is None:
                n_skipped += 1
            indicators.append(dec.found)
        last_known: Optional[bool] = None
        last_p: Optional[float] = None
        for p, ind in zip(grid, indicators):
            if ind is None:
                continue
            if last_known is False and ind is True:
                violations.append({"trial": t, "p_low": last_p, "p_high": p})
            last_known, last_p = ind, p
    return {
        "params": params.to_json_dict(),
        "p_list": list(grid),
        "n_trials": n_trials,
        "n_skipped_budget": n_skipped,
        "violations": violations,
        "passed": not violations,
    }


# ----------------------------------------------------------------------------
# verification battery

def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _identity_params(fast: bool):
    out = []
    n_hi = 24 if fast else 40
    for k in range(2, 6):
        for r in range(2, 6):
            for n in range(max(2 * k, r * k), n_hi + 1):
                out.append(Params(n=n, k=k, r=r))
    return out


def _brute_total_edges(params: Params) -> int:
    masks = model.vertex_masks(params.n, params.k)

    def rec(start: int, depth: int, used: int) -> int:
        if depth == params.r:
            return 1
        c = 0
        for i in range(start, len(masks)):
            if masks[i] & used == 0:
                c += rec(i + 1, depth + 1, used | masks[i])
        return c

    return rec(0, 0, 0)


def verify_suite(fast: bool = False, seed: int = 0) -> dict:
    """The cross-check battery behind the `verify` CLI subcommand.

    Deterministic for a given (fast, seed): reruns produce identical bytes.
    """
    checks = []

    # closed-form identities over a parameter grid
    bad = []
    for params in _identity_params(fast):
        q = derive(params)
        if q.trivial_size != sum(q.star_increments):
            bad.append((params.n, params.k, params.r, "trivial_size"))
        if q.star_overlap > params.k * binomial(params.n - 2, params.k - 2):
            bad.append((params.n, params.k, params.r, "star_overlap"))
        lo = (params.r - 1) * binomial(params.n - params.r + 1, params.k - 1)
        hi = (params.r - 1) * binomial(params.n - 1, params.k - 1)
        if not lo <= q.trivial_size <= hi:
            bad.append((params.n, params.k, params.r, "trivial_size_range"))
    checks.append(_check("identities", not bad,
                         f"{len(_identity_params(fast))} parameter triples" +
                         (f"; failures: {bad[:5]}" if bad else "")))

    # M oracle: enumerated star-union-plus-one edges vs the closed form seam
    m_cases = [(8, 2, 2), (10, 2, 2), (10, 2, 3), (12, 3, 2), (11, 2, 4)]
    draws = 3 if fast else 8
    bad = []
    rng = _streams.generator_for(seed, _streams.DOMAIN_GENERATOR, 1)
    for n, k, r in m_cases:
        params = Params(n=n, k=k, r=r)
        want = _m_reference(params)
        for _ in range(draws):
            centers = tuple(sorted(int(x) + 1 for x in
                                   rng.choice(n, size=r - 1, replace=False)))
            free = [e for e in range(1, n + 1) if e not in centers]
            picks = rng.choice(len(free), size=k, replace=False)
            outside = KSubset.from_elements([free[i] for i in picks], n)
            got = model.trivial_plus_one_edge_count(params, centers, outside)
            if got != want:
                bad.append((n, k, r, centers, outside.elements(), got, want))
    checks.append(_check("m_oracle", not bad,
                         f"{len(m_cases)} parameter triples x {draws} draws" +
                         (f"; failures: {bad[:3]}" if bad else "")))

    # total edge count: direct disjoint-tuple enumeration vs closed form
    bad = []
    cases = 0
    cap = 21 if fast else 30
    for k in (2, 3):
        for n in range(2 * k, 9):
            if binomial(n, k) > cap:
                continue
            for r in range(2, n // k + 1):
                params = Params(n=n, k=k, r=r)
                cases += 1
                if _brute_total_edges(params) != total_edge_count(params):
                    bad.append((n, k, r))
    checks.append(_check("total_edges_oracle", not bad,
                         f"{cases} instances with C(n,k) <= {cap}" +
                         (f"; failures: {bad}" if bad else "")))

    # sampler agreement: retained-count mean of both samplers vs p * total
    params = Params(n=6, k=2, r=2)
    p = 0.3
    nseeds = 300 if fast else 1200
    expect = p * total_edge_count(params)
    sd = math.sqrt(p * (1 - p) * total_edge_count(params))
    detail_parts = []
    ok = True
    for kind in SAMPLER_KINDS:
        total = 0
        for i in range(nseeds):
            s = _streams.derive_seed(seed, _streams.DOMAIN_GENERATOR, 2, i)
            total += model.make_sample(params, p, s, kind).num_retained
        mean = total / nseeds
        z = (mean - expect) / (sd / math.sqrt(nseeds))
        detail_parts.append(f"{kind}: mean={mean:.3f} z={z:+.2f}")
        ok = ok and abs(z) <= 4.0
    checks.append(_check("sampler_agreement", ok,
                         f"{nseeds} seeds each; " + "; ".join(detail_parts)))

    # hitting-set duality: tau + alpha = V on sampled instances
    bad = []
    duals = [(Params(6, 2, 2), 0.5), (Params(7, 2, 2), 0.3), (Params(6, 2, 3), 0.6)]
    reps = 2 if fast else 5
    for params, p in duals:
        for i in range(reps):
            s = _streams.derive_seed(seed, _streams.DOMAIN_GENERATOR, 3, i)
            sample = model.make_sample(params, p, s)
            alpha = solver.max_independent_set(sample).alpha
            tau = solver.min_hitting_set(sample.edges(), sample.num_vertices).size
            if alpha + tau != sample.num_vertices:
                bad.append((params.n, params.k, params.r, i, alpha, tau))
    checks.append(_check("hitting_set_duality", not bad,
                         f"{len(duals) * reps} sampled instances" +
                         (f"; failures: {bad}" if bad else "")))

    # lex prefixes minimize induced edges at tiny scale
    smax = 5 if fast else 7
    bad = []
    for s in range(1, smax + 1):
        rep = extremal.verify_lex_minimality(6, 2, 2, s)
        if not rep.min_attained_by_lex or rep.partial:
            bad.append((s, rep.lex_edges, rep.min_edges))
    checks.append(_check("lex_minimality", not bad,
                         f"(6,2,2) s in 1..{smax}, exhaustive" +
                         (f"; failures: {bad}" if bad else "")))

    # threshold definition: p_c * M recovers log of the pair count
    bad = []
    for params in ((Params(10, 2, 2), Params(20, 2, 2), Params(30, 2, 2),
                    Params(12, 2, 3), Params(20, 3, 2))):
        q = derive(params)
        if q.p_critical is None:
            bad.append((params.n, params.k, params.r, "missing"))
            continue
        lhs = q.p_critical * q.trivial_plus_one_edges
        rhs = math.log(binomial(params.n, params.r - 1) *
                       binomial(params.n - params.r + 1, params.k))
        if abs(lhs - rhs) > 1e-9 * abs(rhs):
            bad.append((params.n, params.k, params.r, lhs, rhs))
    checks.append(_check("p_critical_definition", not bad,
                         "5 parameter triples" + (f"; failures: {bad}" if bad else "")))

    # classification sanity: star unions are trivial; deficits sum to the
    # residual on arbitrary size-N families
    bad = []
    rng = _streams.generator_for(seed, _streams.DOMAIN_GENERATOR, 4)
    for params in (Params(6, 2, 2), Params(8, 2, 3)):
        ntriv = star_union_size(params)
        nvert = binomial(params.n, params.k)
        centers = tuple(range(1, params.r))
        triv = model.star_union(params, centers)
        c = solver.classify_family(triv, params)
        if c.label != "trivial" or c.centers != centers:
            bad.append((params.n, params.k, params.r, "star union mislabeled"))
        for _ in range(3 if fast else 10):
            picks = rng.choice(nvert, size=ntriv, replace=False)
            fam = solver._family_from_rank_iter(params, (int(x) for x in picks))
            c = solver.classify_family(fam, params)
            if sum(c.deficits) != c.residual:
                bad.append((params.n, params.k, params.r, "deficit sum"))
    checks.append(_check("classification", not bad,
                         "star unions + random families" +
                         (f"; failures: {bad}" if bad else "")))

    # explicit-sampler coupling: lower p keeps a subset of the edges
    params = Params(8, 2, 2)
    bad = []
    for i in range(2 if fast else 6):
        s = _streams.derive_seed(seed, _streams.DOMAIN_GENERATOR, 5, i)
        lowset = model.sample_explicit(params, 0.2, s).edge_set()
        highset = model.sample_explicit(params, 0.6, s).edge_set()
        if not lowset <= highset:
            bad.append(i)
    checks.append(_check("sampler_coupling", not bad,
                         "nested retention at p=0.2 vs p=0.6" +
                         (f"; failures: {bad}" if bad else "")))

    # star unions verify independent in sampled hypergraphs
    bad = []
    for params in (Params(8, 2, 2), Params(9, 2, 3)):
        centers = tuple(range(1, params.r))
        fam = model.star_union(params, centers)
        for i in range(2 if fast else 4):
            s = _streams.derive_seed(seed, _streams.DOMAIN_GENERATOR, 6, i)
            sample = model.make_sample(params, 0.7, s)
            if not solver.is_independent(sample, fam):
                bad.append((params.n, params.k, params.r, i))
    checks.append(_check("star_union_independent", not bad,
                         "unions of r-1 stars in sampled hypergraphs" +
                         (f"; failures: {bad}" if bad else "")))

    return {
        "fast": fast,
        "seed": seed,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
