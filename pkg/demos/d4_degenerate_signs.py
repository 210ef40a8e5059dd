"""D4: sixteen sign vectors for 2a1+a2+a3+a4, two of which collapse to {0}."""
from shard_forge import load, positive_expression
from shard_forge.shards import recursive_sign_cells, shards_direct

c = load("d4")
beta = (2, 1, 1, 1)
e = positive_expression(c, beta)
print("expression: S%d then" % (e.seed + 1), [i + 1 for i in e.steps])

for signs, K in recursive_sign_cells(c, e):
    tag = "".join("+" if s > 0 else "-" for s in signs)
    print(tag, "dim", K.dim, "rays", K.rays if K.dim else "-")

print(len(shards_direct(c, beta)), "distinct shards")
print(len(shards_direct(c, (1, 1, 1, 1))), "shards for a1+a2+a3+a4")
