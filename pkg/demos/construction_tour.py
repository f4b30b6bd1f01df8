"""Walk through every explicit construction and check it with the verifier.

Run with ``python demos/construction_tour.py``.
"""

from arithcordial import graphs as gr
from arithcordial.constructions import (
    check_join_condition,
    check_sufficient_condition,
    label_corona_gh,
    label_corona_k1,
    label_corona_path,
    label_join_kayak,
    label_join_path_cycle,
    label_ladder,
    label_snake,
    label_star_jacobi,
    label_tensor_complete,
)


def show(res):
    r = res.report()
    flag = "cordial" if r.cordial else "NOT cordial"
    print(f"{res.provenance:<40} |V|={res.graph.order:<4} e0={r.e0:<4} e1={r.e1:<4} {flag}")
    if res.predicted is not None and tuple(res.predicted) != (r.e0, r.e1):
        print(f"    predicted {res.predicted} but verified ({r.e0}, {r.e1})")


# Stars under the Jacobi symbol: each leaf edge sum hits one coprime residue exactly once
star = label_star_jacobi(15, 2, 1)
show(star)
print("   edge sums fill residue blocks", check_sufficient_condition(star.graph, star.labeling, 15).blocks)

# Sum structures with the Legendre symbol
show(label_ladder(5))
print("   ladder labels", label_ladder(5).labeling)
show(label_snake(3, 7))
show(label_tensor_complete(gr.cycle(4), 5))

# G o P_{p-1} balances when 2 is a non-residue mod p...
show(label_corona_path(gr.cycle(4), 13))
# ...and is off by 2n when 2 is a residue (here p = 7)
show(label_corona_path(gr.cycle(4), 7, enforce=False))

# Product structures
show(label_join_kayak(11))
pc = label_join_path_cycle(17)
show(pc)
cert = check_join_condition(gr.path(8), gr.cycle(8), pc.labeling, 17)
print(f"   balance identity: eps={cert.epsilon}, |B|={cert.b_size}, omega={cert.omega}")
show(label_corona_k1(gr.cycle(6), 13))
h = gr.Graph(4, tuple(e for e in gr.complete(4).edges if e != (0, 1)))
show(label_corona_gh(gr.path(4), h, 5, 1))
