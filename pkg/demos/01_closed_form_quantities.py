"""
Closed-form quantities of a Kneser hypergraph
=============================================

Vertices are the k-subsets of {1..n}; edges are r-tuples of pairwise
disjoint vertices.  Everything here is an exact integer or a log-domain
float, no sampling involved.
"""

from kneser_lab import Params, derive, expected_trivial_plus_one

params = Params(n=30, k=2, r=2)
q = derive(params)

print(f"KG^{params.r}_({params.n},{params.k})")
print(f"  vertices                 {q.num_vertices}")
print(f"  edges                    {q.total_edges}")
print(f"  star size                {q.star_increments[0]}")

# the largest "trivial" independent set is a union of r-1 stars; its size
# N decomposes as a sum of per-star increments
print(f"  trivial size N           {q.trivial_size}")
print(f"  star increments          {q.star_increments} (sum {sum(q.star_increments)})")

# M counts the edges that appear once a single outside vertex joins the
# union; it is the exponent that drives the whole threshold story
print(f"  edges through one extra  {q.trivial_plus_one_edges}")
print(f"  critical p               {q.p_critical:.6f}")

# below the threshold, trivial-plus-one independent sets are abundant in
# expectation; above it they die out
for p in (0.1, 0.2, 0.3, 0.35, 0.4, 0.5):
    ey = expected_trivial_plus_one(params, p)
    marker = "<- p_c" if abs(p - q.p_critical) < 0.03 else ""
    print(f"  E[Y] at p={p:<4}  {ey:12.4f}  {marker}")
