# A five-vertex graph, its zonotope, and why its Venkov cycles are generated.
from parallelo.linalg import rank
from parallelo.venkov import build_venkov, check_gain_generation, half_belt_cycles, projection_spans
from parallelo.zonograph import EXAMPLE_GRAPH as g
from parallelo.zonograph import classify_3d, contract, enumerate_belts, enumerate_facets

print(g)

facets = enumerate_facets(g)
for k, f in enumerate(facets, start=1):
    print(f"F{k}: {f.label()}")

# belts are connected 3-partitions; the ones missing an edge between two parts have only 4 facets
for k, b in enumerate(enumerate_belts(g), start=1):
    tag = "" if b.primitive else "   <- four facets"
    print(f"f{k}: {b.label()}{tag}")

vg = build_venkov(g)
print(len(vg.vertices), "vertices,", len(vg.edges), "edges, cycle space of dimension", vg.cycle_dim())

halves = half_belt_cycles(vg)
print("half-belt triangles alone span", rank(halves))

# projecting along a zone vector = contracting the edge
for span in projection_spans(g, vg):
    kind = classify_3d(contract(g, span.edge)).value
    print(span.edge, kind.ljust(24), [f"F{k + 1}" for k in span.vertices])

rep = check_gain_generation(g)
print("gain rank", rep.gain_rank, "of", rep.cycle_dim, "->", "generated" if rep.passed else "NOT generated")

# the same answer from the codimension-3 faces directly
print("direct method:", check_gain_generation(g, "direct").gain_rank)
