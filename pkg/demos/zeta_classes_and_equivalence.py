"""Residue classes of a few zeta functions, and moving a labeling between two
equivalent structures.

Run with ``python demos/zeta_classes_and_equivalence.py``.
"""

from arithcordial import graphs as gr
from arithcordial.equivalence import build_psi, identity_witness, transfer, verify_equivalence
from arithcordial.labeling import verify
from arithcordial.search import find_cordial_labeling
from arithcordial.structures import (
    check_prop_balance,
    check_prop_congruence,
    check_prop_multiplicative,
    make,
    residue_classes,
)

for s in [make("legendre", 7), make("index-parity", 7), make("index-chi", 7),
          make("jacobi", 15), make("jacobi-factor", 15, param=3), make("euler-quotient", 7)]:
    c = residue_classes(s)
    props = [check(s) for check in (check_prop_congruence, check_prop_balance, check_prop_multiplicative)]
    marks = "".join("+" if p else "-" for p in props)
    print(f"{s.spec:<28} A0={c.A0}  A1={c.A1}  props {marks}")

a, b = residue_classes(make("index-parity", 7)), residue_classes(make("index-chi", 7))
print("index parity vs index chi: same split, labels swapped:", (a.A0, a.A1) == (b.A1, b.A0))
print()

# Two different characters mod 15 that are nonetheless equivalent on {1..14}
s1 = make("jacobi-factor", 15, "product", param=3)
s2 = make("jacobi-factor", 15, "product", param=5)
w = build_psi(15, 1, -1, s1, s2)
print("psi moves", {a: b for a, b in w.psi.items() if a != b})
print("psi verifies:", bool(verify_equivalence(w.source, w.target, w)))
bad = verify_equivalence(w.source, w.target, identity_witness(w.source, w.target))
print("identity fails at pair", bad.pair, "-", bad.reason)

g = gr.path(14)
f = find_cordial_labeling(g, w.source, limit=14).found
moved = transfer(f, w)
r1, r2 = verify(g, f, w.source), verify(g, moved, w.target)
print("found  ", f, (r1.e0, r1.e1))
print("moved  ", moved, (r2.e0, r2.e1))
print("same edge labels:", r1.labels == r2.labels)
