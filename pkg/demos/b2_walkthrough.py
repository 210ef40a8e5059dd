"""B2 over F_3 and F_9: six shards, six bricks, and the stability map between them."""
from shard_forge import load, positive_expression, shards_direct, bricks_of_dimension
from shard_forge.species import to_json
from shard_forge.stability import stab_result, submodule_dim_vectors

c = load("b2")
print(c)

for beta in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    e = positive_expression(c, beta)
    print()
    print("beta =", beta, " seed", e.seed + 1, " steps", [i + 1 for i in e.steps], " d_beta =", c.d_beta(beta))
    for s in shards_direct(c, beta):
        print("  shard  rays", s.cone.rays, " lineality", s.cone.lineality)
    for w, M in bricks_of_dimension(c, beta):
        r = stab_result(c, w, M)
        print("  brick ", w, " maps", to_json(M)["maps"])
        print("         submodules", sorted(submodule_dim_vectors(M)), " Stab rays", r.cone.rays)

# the two bricks of dimension a1+a2 differ only in which way the single arrow points
