# Every connected graph on five vertices, sorted into four-dimensional space-filling zonotopes.
from collections import Counter

from parallelo.report import describe, k33_case
from parallelo.oracle import matroid_classes, zonotope_classes
from parallelo.venkov import check_gain_generation
from parallelo.zonograph import enumerate_candidate_graphs, enumerate_facets

graphs = enumerate_candidate_graphs(5)
print(len(graphs), "graphs")

reports = [check_gain_generation(g) for g in graphs]
print("all generated:", all(r.passed for r in reports))

classes = zonotope_classes(graphs)
print(len(classes), "distinct zonotopes; same as graphic matroids:", classes == matroid_classes(graphs))

for members in classes:
    g = graphs[members[0]]
    text = describe(g)
    if text.startswith("F1"):
        text = f"{len(enumerate_facets(g))} facet pairs"
    print(f"{len(members)} x {g.to_text():40s} {text}")

print(Counter(len(g.edges) for g in graphs))

# the one space-filling zonotope not coming from a graph
print(k33_case())
