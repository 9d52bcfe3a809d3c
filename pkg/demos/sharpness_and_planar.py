"""
Where signs cost colours, and planar samples
============================================

``G_n`` glues one all-positive and ``n - 1`` all-negative copies of ``K_n``.
Its underlying graph needs ``n`` colours while the signed graph needs
``2n - 1``.  The second half runs the partition constructions on the bundled
planar samples.
"""

from pathlib import Path

from signedcolour import chromatic_number, construct_sharpness_graph
from signedcolour.colour import degeneracy_ordering, greedy_colour, palette_size, unsigned_chromatic_number
from signedcolour.io import parse_graph_file
from signedcolour.structure import (
    brute_acyclic_colouring,
    brute_partition_search,
    colour_from_acyclic,
    colour_from_independent_forest_partition,
)

for n in (1, 2, 3):
    g = construct_sharpness_graph(n)
    print(f"G_{n}: {g.n} vertices, {g.m} edges, underlying chi {unsigned_chromatic_number(g)}, signed chi {chromatic_number(g).chi}")

fixtures = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# an acyclic 5-colouring pairs up into a colouring from M_5
for path in sorted((fixtures / "planar").glob("*.txt"))[:4]:
    g = parse_graph_file(path.read_text())
    phi = colour_from_acyclic(g, brute_acyclic_colouring(g, 5))
    print(f"{path.stem:22} acyclic route uses {palette_size(phi)} colours, chi = {chromatic_number(g).chi}")

# triangle-free planar graphs are 3-degenerate, so greedy stays in M_4
for path in sorted((fixtures / "triangle_free").glob("*.txt"))[:3]:
    g = parse_graph_file(path.read_text())
    k, order = degeneracy_ordering(g)
    print(f"{path.stem:22} degeneracy {k}, greedy uses {palette_size(greedy_colour(g, order, palette=k + 1))}")

# girth 5: an independent set plus a forest gives colours 0 and ±1
for path in sorted((fixtures / "girth5").glob("*.txt"))[:3]:
    g = parse_graph_file(path.read_text())
    p = brute_partition_search(g, "independent-forest")
    phi = colour_from_independent_forest_partition(g, p)
    print(f"{path.stem:22} |U|={len(p.independent)} |W|={len(p.forest)} colours {sorted(set(phi))}")
