"""
Switching, balance and the 2-colour test
=========================================

A signed graph is only defined up to switching.  This walk-through switches a
small graph around, asks whether it is balanced, and checks that two colours
suffice exactly when the graph is antibalanced.
"""

from signedcolour import build_graph, chromatic_number, is_antibalanced, is_balanced, switch
from signedcolour.colour import is_proper, switch_colouring

# a 4-circuit with one negative edge
c4 = build_graph(4, [(0, 1, "-"), (1, 2, "+"), (2, 3, "+"), (0, 3, "+")])
report = is_balanced(c4)
print("balanced:", report.balanced, "negative circuit (edge indices):", report.circuit)

# switching at {0} moves the minus sign but keeps the circuit negative
moved = switch(c4, {0})
print("after switching at 0:", moved.edges)
print("still unbalanced:", not is_balanced(moved).balanced)

# two negative edges that share no endpoint cancel out
c4b = build_graph(4, [(0, 1, "-"), (1, 2, "+"), (2, 3, "-"), (0, 3, "+")])
r = is_balanced(c4b)
print("two opposite negatives balanced:", r.balanced, "switch at", sorted(r.switch_set))

# chi <= 2 exactly for antibalanced graphs
for g in (c4, c4b, c4.negated()):
    print(f"antibalanced={is_antibalanced(g)!s:5}  chi={chromatic_number(g).chi}")

# colourings follow the graph through a switch: negate the switched vertices
res = chromatic_number(c4)
s = {1, 2}
print("witness", res.witness, "->", switch_colouring(res.witness, s),
      "proper on switched graph:", is_proper(switch(c4, s), switch_colouring(res.witness, s)))
