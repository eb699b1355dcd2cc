"""Walk through the five lattice families at small rank.

Prints element and cover counts, then checks a join computed by the
closed formula for bi-leveled trees against the generic one.
"""

from treelattices import build, encode
from treelattices.orders import multi_join, multi_meet


def summary(rank=4):
    for fam in ("tamari", "weak", "multi", "compo", "boolean"):
        P = build(fam, rank).poset
        print(f"{fam:8s} rank {rank}: {len(P):4d} elements, {len(P.covers):4d} covers, "
              f"lattice={P.is_lattice()}")


if __name__ == "__main__":
    summary()

    M = build("multi", 4).poset
    a, b = M.elements[3], M.elements[10]
    print()
    print("a        ", encode(a))
    print("b        ", encode(b))
    print("join     ", encode(multi_join(a, b)), "(formula)")
    print("         ", encode(M.join(a, b)), "(generic)")
    print("meet     ", encode(multi_meet(a, b)), "(formula)")
    print("         ", encode(M.meet(a, b)), "(generic)")

    # DOT for the 3d multiplihedron; pipe into `dot -Tpng`
    with open("multiplihedron4.dot", "w") as fh:
        fh.write(M.to_dot(name="M4"))
    print("\nwrote multiplihedron4.dot")
