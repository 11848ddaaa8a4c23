"""Deterministic randomness plumbing.

Two kinds of stream live here:

* a counter-style hash stream: each (seed, domain, words...) key maps to one
  uniform in [0,1) through a murmur-style finalizer chain.  Order of
  evaluation is irrelevant, so per-edge coin flips are reproducible no
  matter how edges are enumerated or sharded, and retaining an edge iff
  u < p couples the samples across p for a fixed seed.
* numpy Generators seeded from those hashes for the sequential samplers.

The scalar and vectorized hash paths are separate implementations of the
same function and are cross-tested.
"""

from __future__ import annotations

import math

import numpy as np

_U64 = (1 << 64) - 1
_MULT1 = 0xFF51AFD7ED558CCD
_MULT2 = 0xC4CEB9FE1A85EC53
_GOLDEN = 0x9E3779B97F4A7C15

# domain tags keep the edge stream, trial-seed stream, and generator seeds
# from ever colliding on the same key
DOMAIN_EDGE = 0xED6E
DOMAIN_TRIAL = 0x7215
DOMAIN_GENERATOR = 0x6E12
DOMAIN_COUPLED = 0xC0B1


def mix64(x: int) -> int:
    """murmur3 fmix64: a bijective avalanche on 64 bits."""
    x &= _U64
    x ^= x >> 33
    x = (x * _MULT1) & _U64
    x ^= x >> 33
    x = (x * _MULT2) & _U64
    x ^= x >> 33
    return x


def combine(seed: int, *words: int) -> int:
    """Hash-chain words onto a seed; order-sensitive, 64-bit."""
    h = mix64((seed & _U64) ^ _GOLDEN)
    for w in words:
        h = mix64(h ^ ((w * _GOLDEN) & _U64))
    return h


def derive_seed(master_seed: int, domain: int, *indices: int) -> int:
    return combine(master_seed, domain, *indices)


def uniform_from_key(seed: int, domain: int, words) -> float:
    """One uniform in [0,1) from a (seed, domain, words) key."""
    h = combine(seed, domain, *words)
    return (h >> 11) * 2.0 ** -53


def uniforms_for_rows(seed: int, domain: int, rows: np.ndarray) -> np.ndarray:
    """Vectorized twin of uniform_from_key over the rows of an integer array.

    rows has shape (m, w); row j yields the same value as
    uniform_from_key(seed, domain, rows[j]).
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    m = rows.shape[0]
    golden = np.uint64(_GOLDEN)
    h = np.full(m, _mix64_scalar_start(seed), dtype=np.uint64)
    h = _mix64_vec(h ^ np.uint64((domain * _GOLDEN) & _U64))
    for col in range(rows.shape[1]):
        h = _mix64_vec(h ^ (rows[:, col] * golden))
    return (h >> np.uint64(11)).astype(np.float64) * 2.0 ** -53


def _mix64_scalar_start(seed: int) -> np.uint64:
    return np.uint64(mix64((seed & _U64) ^ _GOLDEN))


def _mix64_vec(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(33))
    x = x * np.uint64(_MULT1)
    x = x ^ (x >> np.uint64(33))
    x = x * np.uint64(_MULT2)
    x = x ^ (x >> np.uint64(33))
    return x


def generator_for(seed: int, domain: int, *indices: int) -> np.random.Generator:
    """A PCG64 generator keyed off the hash stream."""
    return np.random.default_rng(derive_seed(seed, domain, *indices))


# numpy's binomial silently returns 0 once 1-p rounds to 1.0 (p < 2**-53) and
# overflows for n beyond C long; stay well inside the verified-correct region
_NUMPY_BINOMIAL_SAFE = 10**15
_TINY_P = 2.0**-45


def _binomial_inversion(rng: np.random.Generator, n: int, p: float) -> int:
    # CDF walk with P(X=0) computed in the log domain, so it stays exact for
    # p far below float-subtraction resolution; callers guarantee n*p <= ~30
    u = float(rng.random())
    prob = math.exp(n * math.log1p(-p))
    cdf = prob
    ratio = p / (1.0 - p)
    k = 0
    while u > cdf:
        prob *= (n - k) / (k + 1.0) * ratio
        cdf += prob
        k += 1
        if k >= n or prob == 0.0:
            break
    return k


def binomial_variate(rng: np.random.Generator, n: int, p: float, int64_cutoff: int = _NUMPY_BINOMIAL_SAFE) -> int:
    """Exact Binomial(n, p) draw for arbitrary-precision n.

    For moderate n and non-degenerate p this is numpy's generator (exact
    inversion for small means, exact BTPE accept-reject otherwise).  When p
    is too small for 1-p to carry precision, a log-domain inversion walk
    takes over.  Beyond the cutoff the count is reduced by conditioning on
    a beta order statistic: with i = n // 2, the i-th smallest of n uniforms
    is Beta(i, n-i+1), and splitting on whether it clears p halves n per
    step while preserving the distribution.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    count = 0
    while n > int64_cutoff:
        i = n // 2
        x = rng.beta(i, n - i + 1)
        if x <= p:
            count += i
            p = (p - x) / (1.0 - x)
            n = n - i
        else:
            p = p / x
            n = i - 1
        p = min(max(p, 0.0), 1.0)  # guard float drift at the recursion edges
    if p == 0.0 or n == 0:
        return count
    if p == 1.0:
        return count + n
    if p < _TINY_P:
        return count + _binomial_inversion(rng, n, p)
    return count + int(rng.binomial(int(n), p))
