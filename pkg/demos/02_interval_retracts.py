"""Interval retracts between the lattices, and what they do to Moebius functions."""

from treelattices import encode
from treelattices.projections import as_poset_map, beta, descents, gamma, hat_varphi, verify_retract
from treelattices.trees import bij2, permutations

if __name__ == "__main__":
    for name in ("gamma", "varphi", "hat_varphi", "hat_gamma"):
        for rank in range(1, 6):
            rep, mob = verify_retract(name, rank)
            mobius = "ok" if mob.passed else "FAILED"
            print(f"{name:10s} rank {rank}: retract {'ok' if rep.passed else 'FAILED'}, "
                  f"moebius sums {mobius} on {mob.pairs_checked} pairs")

    f = as_poset_map("gamma", 4)
    print("\nfibers of gamma over Y_4 (sizes):")
    print(" ".join(str(len(v)) for v in f.fibers().values()))

    # two ways from S_4 to the Boolean lattice
    print("\npermutation  descents  via painted trees")
    for w in permutations(4):
        d = descents(w)
        h = hat_varphi(gamma(bij2(beta(w))))
        if d != h:
            print(f"{encode(w):11s}  {encode(d):8s}  {encode(h)}")
