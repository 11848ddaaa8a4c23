"""
Extremal families: lex prefixes, stars, and matchings
=====================================================

Among all families of s vertices, the lexicographically first one induces
the fewest edges; star unions are the conjectured maximum independent
sets.  Both claims are checked by exhaustive enumeration at desk scale.
"""

from kneser_lab import (
    check_corollary_on_lex,
    corollary_lower_bound,
    ekr_oracle,
    emc_oracle,
    lex_initial_family,
    verify_lex_minimality,
)

# the first five 2-subsets of {1..6} are exactly the star of element 1
fam = lex_initial_family(6, 2, 5)
print("L_{6,2}(5) =", fam.to_element_lists())

# one vertex past the star, edges must appear; lex still minimizes them
for s in range(4, 8):
    rep = verify_lex_minimality(6, 2, 2, s)
    print(f"s={s}: lex induces {rep.lex_edges}, true minimum {rep.min_edges}, "
          f"lex optimal: {rep.min_attained_by_lex} "
          f"({rep.families_enumerated} families checked)")

# the corollary: any family m vertices past the trivial size induces at
# least m times the one-extra-vertex edge count
for q, m in [(2, 1), (2, 3), (3, 1)]:
    bound = corollary_lower_bound(10, 2, q, m)
    ok = check_corollary_on_lex(10, 2, q, m)
    print(f"q={q}, m={m}: bound {bound}, holds on the lex family: {ok}")

# stars are the unique maximum intersecting families away from n = 2k
for n in (4, 5, 6):
    rep = ekr_oracle(n, 2)
    print(f"n={n}: alpha {rep.alpha} = star size {rep.star_size}, "
          f"all maxima are stars: {rep.all_maximum_trivial}")

# the matching conjecture value switches branch at small n
for n in (6, 7, 8):
    rep = emc_oracle(n, 2, 3)
    print(f"n={n}, r=3: alpha {rep.alpha}, conjectured {rep.conjectured_value} "
          f"via {rep.attained_by}, matches: {rep.matches_conjecture}")
