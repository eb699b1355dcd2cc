"""Coproducts of trees, the M basis, and primitives of the painted coalgebra."""

from treelattices import coalgebra as co
from treelattices.trees import binary_trees, encode, parse_tree

if __name__ == "__main__":
    t = parse_tree("((..)(..))")
    print("coproduct of F", encode(t))
    print(co.coproduct_ysym(co.LinearCombination.basis(t)).format())

    print("\nM basis in degree 3, expanded in F:")
    for s in binary_trees(3):
        prim = co.is_primitive(co.m_basis(s), co.coproduct_ysym, co.LEAF)
        print(f"M{encode(s)} = " + " + ".join(f"{c}*F{encode(k)}" for k, c in co.m_basis(s).sorted_terms())
              + ("   primitive" if prim else ""))

    print("\npainted primitives of degree 3:")
    for rec in co.psym_primitives(3):
        print(f"  [{rec.source}] at {encode(rec.parameter)}: {'verified' if rec.verified else 'NOT primitive'}")
