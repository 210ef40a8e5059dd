"""Rank-4 family: the inversion arrangement of one word changes with the Cartan entries."""
from shard_forge.dependence import cartan_dependence

for x, y, z in [(2, 2, 2), (2, 2, 3), (3, 2, 2), (4, 3, 2)]:
    out = cartan_dependence(x, y, z)
    print((x, y, z), "det", out["det_1278"], " cross ratio", out["cross_ratio"],
          " regions", out["regions"])

# x = z makes four hyperplanes meet in a line, and the region count drops
out = cartan_dependence(3, 2, 2)
for k, g in enumerate(out["gammas"], 1):
    print("gamma_%d" % k, g)
