import math

import numpy as np
import pytest

from kneser_lab import _streams


def test_mix64_known_values():
    # frozen reference outputs of the 64-bit finalizer
    assert _streams.mix64(0) == 0
    assert _streams.mix64(0x123456789) == 0x9A7169E5B88F0020


def test_mix64_range_and_spread():
    seen = {_streams.mix64(i) for i in range(1000)}
    assert len(seen) == 1000
    for v in list(seen)[:10]:
        assert 0 <= v < 1 << 64


def test_derive_seed_stability_and_separation():
    # frozen values guard against accidental reseeding changes
    assert _streams.derive_seed(0, _streams.DOMAIN_EDGE, 3, 5) == 11833079152810449043
    assert _streams.derive_seed(42, _streams.DOMAIN_TRIAL, 1, 2) == 17266258497813746798
    a = _streams.derive_seed(9, _streams.DOMAIN_TRIAL, 0, 0)
    b = _streams.derive_seed(9, _streams.DOMAIN_TRIAL, 0, 1)
    c = _streams.derive_seed(9, _streams.DOMAIN_COUPLED, 0, 0)
    assert len({a, b, c}) == 3


def test_uniform_from_key_deterministic():
    u1 = _streams.uniform_from_key(7, _streams.DOMAIN_EDGE, (1, 2))
    u2 = _streams.uniform_from_key(7, _streams.DOMAIN_EDGE, (1, 2))
    assert u1 == u2 == 0.5363288580193986
    assert 0.0 <= u1 < 1.0


def test_vectorized_uniforms_match_scalar():
    rows = np.array([[0, 1], [3, 9], [17, 44], [2, 2]], dtype=np.int64)
    vec = _streams.uniforms_for_rows(123, _streams.DOMAIN_EDGE, rows)
    for i, row in enumerate(rows.tolist()):
        assert vec[i] == _streams.uniform_from_key(123, _streams.DOMAIN_EDGE, tuple(row))
    assert ((vec >= 0) & (vec < 1)).all()


def test_vectorized_uniforms_column_sensitivity():
    rows_a = np.array([[1, 2, 3]], dtype=np.int64)
    rows_b = np.array([[1, 3, 2]], dtype=np.int64)
    ua = _streams.uniforms_for_rows(5, _streams.DOMAIN_EDGE, rows_a)[0]
    ub = _streams.uniforms_for_rows(5, _streams.DOMAIN_EDGE, rows_b)[0]
    assert ua != ub  # order of key words matters


def test_uniform_distribution_sanity():
    rows = np.arange(20000, dtype=np.int64).reshape(-1, 1)
    u = _streams.uniforms_for_rows(0, _streams.DOMAIN_EDGE, rows)
    assert abs(u.mean() - 0.5) < 5 * (1 / math.sqrt(12 * len(u)))
    assert 0.45 < np.median(u) < 0.55


def test_generator_for_reproducible():
    g1 = _streams.generator_for(11, _streams.DOMAIN_GENERATOR, 4)
    g2 = _streams.generator_for(11, _streams.DOMAIN_GENERATOR, 4)
    assert g1.integers(0, 1 << 30, size=8).tolist() == \
        g2.integers(0, 1 << 30, size=8).tolist()
    g3 = _streams.generator_for(11, _streams.DOMAIN_GENERATOR, 5)
    assert g1.integers(0, 1 << 30, size=8).tolist() != \
        g3.integers(0, 1 << 30, size=8).tolist()


def test_binomial_variate_bounds_and_edges():
    rng = _streams.generator_for(1, _streams.DOMAIN_GENERATOR, 0)
    assert _streams.binomial_variate(rng, 100, 0.0) == 0
    assert _streams.binomial_variate(rng, 100, 1.0) == 100
    assert _streams.binomial_variate(rng, 0, 0.5) == 0
    for _ in range(200):
        x = _streams.binomial_variate(rng, 57, 0.3)
        assert 0 <= x <= 57


def test_binomial_variate_mean():
    rng = _streams.generator_for(2, _streams.DOMAIN_GENERATOR, 0)
    n, p, draws = 400, 0.25, 3000
    total = sum(_streams.binomial_variate(rng, n, p) for _ in range(draws))
    mean = total / draws
    se = math.sqrt(n * p * (1 - p) / draws)
    assert abs(mean - n * p) < 5 * se


def test_binomial_variate_beta_splitting_path():
    # force the order-statistic recursion with a tiny cutoff and compare the
    # resulting mean against the direct numpy route
    rng = _streams.generator_for(3, _streams.DOMAIN_GENERATOR, 0)
    n, p, draws = 1000, 0.02, 2000
    split = [_streams.binomial_variate(rng, n, p, int64_cutoff=16) for _ in range(draws)]
    assert all(0 <= x <= n for x in split)
    mean = sum(split) / draws
    se = math.sqrt(n * p * (1 - p) / draws)
    assert abs(mean - n * p) < 5 * se


def test_binomial_variate_huge_n():
    rng = _streams.generator_for(4, _streams.DOMAIN_GENERATOR, 0)
    n = 10**25  # far beyond int64
    p = 1e-24
    vals = [_streams.binomial_variate(rng, n, p) for _ in range(50)]
    assert all(0 <= v <= n for v in vals)
    assert any(v > 0 for v in vals)  # mean 10 per draw
    assert max(v for v in vals) < 100
