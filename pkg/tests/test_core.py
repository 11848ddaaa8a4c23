import json
import math
from itertools import combinations

import pytest

from kneser_lab.core import (
    Family,
    KSubset,
    OutOfRegimeError,
    Params,
    are_disjoint,
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


def test_binomial_values():
    assert binomial(10, 2) == 45
    assert binomial(8, 0) == 1
    assert binomial(5, 7) == 0
    with pytest.raises(ValueError):
        binomial(-1, 2)
    with pytest.raises(ValueError):
        binomial(5, -2)


def test_log_binomial_matches_exact():
    for n in (5, 12, 40, 64):
        for k in range(n + 1):
            assert math.isclose(log_binomial(n, k), math.log(binomial(n, k)),
                                rel_tol=1e-12)
    with pytest.raises(ValueError):
        log_binomial(4, 6)


def test_ksubset_validation():
    s = KSubset.from_elements([2, 5, 1], 9)
    assert s.elements() == (1, 2, 5)
    assert s.k == 3
    with pytest.raises(ValueError):
        KSubset.from_elements([], 6)
    with pytest.raises(ValueError):
        KSubset.from_elements([1, 2, 3, 4], 6)  # 2k > n
    with pytest.raises(ValueError):
        KSubset.from_elements([7], 6)  # element outside ground set
    with pytest.raises(ValueError):
        KSubset(bits=0b11, n=70)  # ground set too large


def test_lex_order_matches_enumeration():
    for n, k in ((6, 2), (7, 3), (9, 4)):
        subsets = [KSubset.from_elements(c, n) for c in combinations(range(1, n + 1), k)]
        assert subsets == sorted(subsets)
        for i, s in enumerate(subsets):
            assert lex_rank(s) == i
            assert lex_unrank(n, k, i) == s
        for a, b in zip(subsets, subsets[1:]):
            assert lex_compare(a, b) == -1
            assert lex_compare(b, a) == 1
        assert lex_compare(subsets[0], subsets[0]) == 0


def test_lex_smallest_prefers_small_elements():
    first = lex_unrank(8, 3, 0)
    assert first.elements() == (1, 2, 3)
    second = lex_unrank(8, 3, 1)
    assert second.elements() == (1, 2, 4)


def test_are_disjoint():
    a = KSubset.from_elements([1, 2], 8)
    b = KSubset.from_elements([3, 4], 8)
    c = KSubset.from_elements([2, 3], 8)
    assert are_disjoint(a, b)
    assert not are_disjoint(a, c)


def test_family_basics():
    members = [KSubset.from_elements(c, 6) for c in [(1, 2), (1, 3), (2, 3)]]
    fam = Family(members)
    assert len(fam) == 3
    assert fam.n == 6 and fam.k == 2
    assert fam.to_element_lists() == [[1, 2], [1, 3], [2, 3]]
    assert fam.ranks() == (0, 1, 5)
    with pytest.raises(ValueError):
        Family(members + [members[0]])  # duplicate
    with pytest.raises(ValueError):
        Family([members[0], KSubset.from_elements([1, 2, 3], 7)])  # mixed shape
    empty = Family([], n=6, k=2)
    assert len(empty) == 0 and empty.n == 6


def test_params_validation():
    Params(n=10, k=2, r=2)
    with pytest.raises(ValueError):
        Params(n=10, k=1, r=2)
    with pytest.raises(ValueError):
        Params(n=10, k=2, r=1)
    with pytest.raises(ValueError):
        Params(n=3, k=2, r=2)  # n < 2k
    with pytest.raises(ValueError):
        Params(n=65, k=2, r=2)


def test_regime_flags():
    assert Params(30, 2, 2).emc_regime  # 60 >= 10
    assert Params(5, 2, 2).emc_regime  # boundary 10 >= 10
    assert not Params(4, 2, 2).emc_regime  # 8 < 10
    assert Params(8, 2, 3).frankl_regime  # 8 >= 8
    assert not Params(7, 2, 3).frankl_regime


def test_quantity_anchors_pair_model():
    p = Params(10, 2, 2)
    assert binomial(10, 2) == 45
    assert star_union_size(p) == 9
    assert star_increments(p) == (9,)
    assert trivial_plus_one_edges_count(p) == 7
    assert star_overlap(p) == 9 - 7
    assert total_edge_count(p) == 45 * 28 // 2


def test_quantity_anchors_triple_model():
    p = Params(8, 2, 3)
    assert star_union_size(p) == 13
    assert star_increments(p) == (7, 6)
    assert sum(star_increments(p)) == star_union_size(p)
    assert trivial_plus_one_edges_count(p) == 4 * 3
    assert total_edge_count(p) == 28 * 15 * 6 // 6


def test_star_increment_sum_identity():
    for n, k, r in ((12, 2, 2), (12, 2, 4), (14, 3, 3), (40, 5, 5), (64, 2, 5)):
        p = Params(n, k, r)
        assert sum(star_increments(p)) == star_union_size(p)


def test_total_edges_small_known():
    assert total_edge_count(Params(6, 2, 2)) == 45
    assert total_edge_count(Params(6, 2, 3)) == 15
    assert total_edge_count(Params(4, 2, 2)) == 3


def test_p_critical_values():
    # ln(C(n,1) * C(n-1,2)) / C(n-3,1) at k=2, r=2
    assert math.isclose(p_critical(Params(10, 2, 2)), math.log(360) / 7, rel_tol=1e-12)
    assert math.isclose(p_critical(Params(20, 2, 2)), math.log(3420) / 17, rel_tol=1e-12)
    assert math.isclose(p_critical(Params(30, 2, 2)), math.log(12180) / 27, rel_tol=1e-12)
    assert math.isclose(p_critical(Params(30, 2, 2)), 0.34842779782458844, rel_tol=1e-12)


def test_p_critical_out_of_regime():
    with pytest.raises(OutOfRegimeError):
        p_critical(Params(4, 2, 2))


def test_p_critical_can_exceed_one():
    q = derive(Params(5, 2, 2))
    assert q.p_critical is not None
    assert q.p_critical > 1.0
    assert q.p_critical_exceeds_one


def test_expected_trivial_plus_one():
    p = Params(10, 2, 2)
    assert expected_trivial_plus_one(p, 0.0) == 360.0
    assert expected_trivial_plus_one(p, 1.0) == 0.0
    assert math.isclose(expected_trivial_plus_one(p, 0.1), 360 * 0.9**7, rel_tol=1e-12)


def test_emc_value_branches():
    star = emc_value(Params(8, 2, 3))
    assert star.value == 13 and star.attained_by == "star_union"
    ground = emc_value(Params(6, 2, 3))
    assert ground.value == binomial(5, 2) == 10
    assert ground.attained_by == "restricted_ground"


def test_hilton_milner_bound():
    assert hilton_milner_bound(6, 2) == 5 - 3 + 1
    assert hilton_milner_bound(10, 3) == binomial(9, 2) - binomial(6, 2) + 1
    with pytest.raises(ValueError):
        hilton_milner_bound(4, 2)  # needs n > 2k


def test_derive_json_round_trip():
    q = derive(Params(10, 2, 2))
    d = q.to_json_dict()
    assert d["num_vertices"] == 45
    assert d["trivial_size"] == 9
    assert d["trivial_plus_one_edges"] == 7
    assert math.isclose(d["p_critical"], math.log(360) / 7, rel_tol=1e-12)
    assert not d["p_critical_exceeds_one"]
    json.dumps(d)  # must be serializable as-is


def test_derive_outside_regime_null_threshold():
    q = derive(Params(4, 2, 2))
    assert q.p_critical is None
    assert q.to_json_dict()["p_critical"] is None
