"""Maximal tubings on small graphs and the order they carry.

Complete graphs recover the weak order and paths recover Tamari. Cycles
and stars are checked for the lattice property by brute force.
"""

from treelattices.orders import build
from treelattices.posets import are_isomorphic
from treelattices.trees import Permutation
from treelattices.tubings import graph_family, lattice_report, permutation_to_tubing, tubing_covers, tubing_poset

if __name__ == "__main__":
    K4 = graph_family("complete", 4)
    low = permutation_to_tubing(Permutation((3, 1, 2, 4)), K4)
    high = permutation_to_tubing(Permutation((4, 1, 2, 3)), K4)
    print(low, "<", high, tubing_covers(high, low, K4))

    for n in range(1, 6):
        same = are_isomorphic(tubing_poset(graph_family("path", n)), build("tamari", n).poset)
        print(f"path-{n} vs Y_{n}: {'isomorphic' if same else 'different'}")

    for fam in ("cycle", "star"):
        for n in range(3, 6):
            print("  ".join(lattice_report(graph_family(fam, n)).lines()))
