"""Count arithmetic cordial labelings of small graphs by exhaustive search.

Run with ``python demos/search_small_graphs.py``.
"""

from arithcordial import graphs as gr
from arithcordial.search import count_cordial_labelings, find_cordial_labeling
from arithcordial.structures import parse_structure

specs = ["legendre@3:sum", "legendre@5:sum", "legendre@5:product", "jacobi@15:sum"]
family = [("P5", gr.path(5)), ("C5", gr.cycle(5)), ("K1,5", gr.star(6)), ("K4", gr.complete(4)),
          ("L3", gr.ladder(3)), ("C6", gr.cycle(6))]

print(f"{'graph':<6}" + "".join(f"{s:>20}" for s in specs))
for name, g in family:
    row = []
    for spec in specs:
        s = parse_structure(spec, range(1, g.order + 1))
        row.append(count_cordial_labelings(g, s).count)
    print(f"{name:<6}" + "".join(f"{c:>20}" for c in row))

# K4 under legendre@3:sum: the edge sums are the same multiset for every labeling
s = parse_structure("legendre@3:sum", range(1, 5))
out = find_cordial_labeling(gr.complete(4), s)
print("\nK4:", "none exists" if out.found is None else out.found, f"after {out.nodes_explored} nodes")

# pruning and memoisation only change the work, never the answer
g = gr.ladder(4)
s = parse_structure("legendre@7:sum", range(1, 9))
fast, slow = find_cordial_labeling(g, s), find_cordial_labeling(g, s, prune=False)
print("L4 smallest:", fast.found, f"({fast.nodes_explored} vs {slow.nodes_explored} nodes)")
