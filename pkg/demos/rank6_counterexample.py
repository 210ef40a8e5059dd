"""A real brick whose stability domain is only 2-dimensional (rank 6, wild type)."""
from shard_forge import load
from shard_forge.demos import RANK6_WORD
from shard_forge.functors import SignedWord, apply_word
from shard_forge.hom import brick_test, hom_ext_dims
from shard_forge.species import check_preprojective
from shard_forge.stability import stab_recursive

c = load("rank6")
w = SignedWord.parse(RANK6_WORD, c.n)
B = apply_word(c, w)

print("word       ", w)
print("dim B      ", B.dims)
print("relation   ", check_preprojective(B))
print("brick      ", brick_test(B))
print("h0, h1, h2 ", hom_ext_dims(B, B))

K = stab_recursive(c, w)
print("Stab(B)     dim", K.dim, "of a possible", c.n - 1)
for r in K.rays:
    print("   ray", r)
