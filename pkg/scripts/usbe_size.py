"""Distinct nodes in the uniquified tree under each vertex ordering."""

import argparse

from sbetree.graph import OrderingMode, degree_ordering, random_graph
from sbetree.rng import derive_seed
from sbetree.search import lbl_search

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n", type=int, default=14)
parser.add_argument("--graphs", type=int, default=100)
parser.add_argument("--seed", type=int, default=606)
args = parser.parse_args()

top = args.n * (args.n - 1) // 2
print("m " + " ".join(mode.value for mode in OrderingMode))
for m in range(args.n, top, max(1, top // 12)):
    means = []
    for mode in OrderingMode:
        total = 0
        for i in range(args.graphs):
            g = random_graph(args.n, m, derive_seed(args.seed, m, i))
            total += lbl_search(g, degree_ordering(g, mode)).total_nodes
        means.append(total / args.graphs)
    print(m, " ".join(f"{x:.1f}" for x in means))
