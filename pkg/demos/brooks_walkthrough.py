"""
Colouring within the maximum degree
===================================

``brooks_colour`` colours a simple connected signed graph with colours from
``M_Δ``, except for balanced complete graphs, balanced odd circuits and
unbalanced even circuits.  The trace hook shows which route it took.
"""

import random

from signedcolour import brooks_colour, build_graph, chromatic_number
from signedcolour.verify import random_connected_signed_graph


def show(name, g):
    steps = []
    cert = brooks_colour(g, trace=steps.append)
    print(f"{name}: Δ={g.max_degree} bound={cert.bound_used} exceptional={cert.exceptional.value}")
    print("   colouring", cert.colouring, " chi =", chromatic_number(g).chi)
    for ev in steps:
        named = {k: v for k, v in ev.info.items() if k in ("a", "x", "b", "v")}
        print("   step", ev.step, "switch", sorted(ev.switch_set), named)

# exceptional: an unbalanced 4-circuit needs three colours
show("unbalanced C4", build_graph(4, [(0, 1, "-"), (1, 2, "+"), (2, 3, "+"), (0, 3, "+")]))

# 2-connected, not complete: colour a and b with 1, then greedy towards x
wheel = [(0, i, "+") for i in range(1, 6)] + [(i, i % 5 + 1, "-" if i == 2 else "+") for i in range(1, 6)]
show("wheel W5", build_graph(6, wheel))

# a cut vertex: two unbalanced triangles glued at vertex 2
show("bowtie", build_graph(5, [(0, 1, "-"), (1, 2, "+"), (0, 2, "+"), (2, 3, "+"), (3, 4, "-"), (2, 4, "+")]))

# and a random 10-vertex graph
show("random", random_connected_signed_graph(random.Random(3), 10, 0.3))
