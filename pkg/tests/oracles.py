"""Independent brute-force references used by the tests.

Nothing here imports the code under test except plain data types.
"""

import itertools
import re

import networkx as nx


def nx_graph(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(1, n + 1))
    h.add_edges_from(edges)
    return h


def connected_bipartitions(n, edges):
    """Unordered {A, B} with both sides inducing connected subgraphs."""
    h = nx_graph(n, edges)
    out = set()
    verts = list(range(1, n + 1))
    for mask in range(1, 2 ** n - 1):
        a = frozenset(v for k, v in enumerate(verts) if mask >> k & 1)
        b = frozenset(verts) - a
        if nx.is_connected(h.subgraph(a)) and nx.is_connected(h.subgraph(b)):
            out.add(frozenset((a, b)))
    return out


def connected_tripartitions(n, edges):
    h = nx_graph(n, edges)
    out = set()
    for labels in itertools.product(range(3), repeat=n):
        parts = [frozenset(v + 1 for v in range(n) if labels[v] == c) for c in range(3)]
        if all(parts) and all(nx.is_connected(h.subgraph(p)) for p in parts):
            out.add(frozenset(parts))
    return out


def simple_cycles_up_to(vg, max_len):
    """Signed edge vectors of simple cycles of a labelled multigraph (edges oriented u -> v)."""
    adj = {}
    for k, e in enumerate(vg.edges):
        adj.setdefault(e.u, []).append((e.v, k, 1))
        adj.setdefault(e.v, []).append((e.u, k, -1))
    found = set()

    def walk(start, cur, seen, used, vec):
        for w, k, s in adj.get(cur, []):
            if k in used:
                continue
            if w == start and len(used) >= 1:
                v = list(vec)
                v[k] += s
                if len(used) + 1 >= 2:
                    found.add(tuple(v))
                continue
            if w in seen or w < start or len(used) + 1 >= max_len:
                continue
            v = list(vec)
            v[k] += s
            walk(start, w, seen | {w}, used | {k}, v)

    for s in range(len(vg.vertices)):
        walk(s, s, {s}, frozenset(), [0] * len(vg.edges))
    return sorted(found)


def d4_points(bound):
    for p in itertools.product(range(-bound, bound + 1), repeat=4):
        if sum(p) % 2 == 0:
            yield p


DOT_NODE = re.compile(r'^\s*(\w+)\s*\[label="([^"]*)"\];\s*$')
DOT_EDGE = re.compile(r'^\s*(\w+)\s*--\s*(\w+)\s*\[label="([^"]*)"\];\s*$')


def parse_dot(text):
    """Minimal undirected DOT reader: returns (name, nodes, edges) or raises ValueError."""
    lines = [l for l in text.strip().splitlines() if l.strip()]
    head = re.match(r"^graph\s+(\w+)\s*\{$", lines[0].strip())
    if not head or lines[-1].strip() != "}":
        raise ValueError("not an undirected DOT graph")
    nodes, edges = {}, []
    for line in lines[1:-1]:
        if m := DOT_NODE.match(line):
            nodes[m.group(1)] = m.group(2)
        elif m := DOT_EDGE.match(line):
            edges.append((m.group(1), m.group(2), m.group(3)))
        else:
            raise ValueError(f"unparsed DOT line {line!r}")
    for a, b, _ in edges:
        if a not in nodes or b not in nodes:
            raise ValueError("edge to an undeclared node")
    return head.group(1), nodes, edges
