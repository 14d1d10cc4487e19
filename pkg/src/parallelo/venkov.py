"""Primitive Venkov graphs, gain cycles and the cycle-generation test.

The Venkov graph here is always the *primitive* one: vertices are pairs of
opposite facets, and every six-facet belt adds a triangle of three labelled
edges.  Cycles are integer vectors indexed by edges, each edge oriented from
its lower-indexed endpoint to its higher one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .linalg import integer_rank, rank_mod_p
from .zonograph import (
    Belt,
    FacetPair,
    Parallelohedron3Kind,
    ZonotopeGraph,
    classify_3d,
    connected_partitions,
    contract,
    enumerate_belts,
    enumerate_facets,
    projection_survivors,
)

CycleVector = tuple[int, ...]


@dataclass(frozen=True)
class VenkovEdge:
    belt: int  # 1-based belt id
    u: int
    v: int  # u < v, indices into VenkovGraph.vertices


@dataclass(frozen=True)
class VenkovGraph:
    vertices: tuple[Hashable, ...]
    edges: tuple[VenkovEdge, ...]

    @classmethod
    def from_triangles(cls, vertices: Sequence[Hashable], triangles: Iterable[Sequence[Hashable]]) -> "VenkovGraph":
        """One labelled edge per pair of corners of every triangle; belts numbered from 1."""
        index = {v: k for k, v in enumerate(vertices)}
        edges = []
        for belt, tri in enumerate(triangles, start=1):
            corners = sorted(index[x] for x in tri)
            if len(set(corners)) != 3:
                raise ValueError(f"belt {belt} does not span three distinct vertices")
            for a, b in itertools.combinations(corners, 2):
                edges.append(VenkovEdge(belt, a, b))
        return cls(tuple(vertices), tuple(edges))

    @property
    def num_belts(self) -> int:
        return len({e.belt for e in self.edges})

    def edge_index(self, belt: int, a: int, b: int) -> tuple[int, int]:
        """Position of the ``belt`` edge joining vertices ``a`` and ``b``, and the sign of travelling a->b."""
        u, v = (a, b) if a < b else (b, a)
        k = self._edge_lookup.get((belt, u, v))
        if k is None:
            raise KeyError(f"no edge of belt {belt} between vertices {a} and {b}")
        return k, (1 if a < b else -1)

    @cached_property
    def _edge_lookup(self) -> dict[tuple[int, int, int], int]:
        return {(e.belt, e.u, e.v): k for k, e in enumerate(self.edges)}

    def components(self, vertices: Iterable[int] | None = None, edges: Iterable[int] | None = None) -> int:
        verts = set(range(len(self.vertices))) if vertices is None else set(vertices)
        parent = {v: v for v in verts}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = len(verts)
        for k in range(len(self.edges)) if edges is None else edges:
            e = self.edges[k]
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def cycle_dim(self) -> int:
        return len(self.edges) - len(self.vertices) + self.components()

    def boundary(self, vec: Sequence[int]) -> list[int]:
        out = [0] * len(self.vertices)
        for c, e in zip(vec, self.edges):
            out[e.u] -= c
            out[e.v] += c
        return out

    def is_cycle(self, vec: Sequence[int]) -> bool:
        return len(vec) == len(self.edges) and not any(self.boundary(vec))

    def walk_vector(self, steps: Iterable[tuple[int, int, int]]) -> CycleVector:
        """Sum of signed edges along ``(belt, from_vertex, to_vertex)`` steps."""
        vec = [0] * len(self.edges)
        for belt, a, b in steps:
            k, s = self.edge_index(belt, a, b)
            vec[k] += s
        return tuple(vec)

    def to_dot(self, name: str = "venkov") -> str:
        lines = [f"graph {name} {{"]
        for k in range(len(self.vertices)):
            lines.append(f'  F{k + 1} [label="{_dot_label(self.vertices[k], k)}"];')
        for e in self.edges:
            lines.append(f'  F{e.u + 1} -- F{e.v + 1} [label="f{e.belt}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_label(v, k: int) -> str:
    if isinstance(v, FacetPair):
        return f"F{k + 1}: {v.label()}"
    return f"F{k + 1}: {v}"


def primitive_belts(g: ZonotopeGraph) -> list[tuple[int, Belt]]:
    """Primitive belts with their 1-based ids in the full belt listing."""
    return [(k, b) for k, b in enumerate(enumerate_belts(g), start=1) if b.primitive]


def build_venkov(g: ZonotopeGraph) -> VenkovGraph:
    facets = enumerate_facets(g)
    index = {f: k for k, f in enumerate(facets)}
    edges = []
    for bid, belt in primitive_belts(g):
        corners = sorted(index[f] for f in belt.facets)
        for a, b in itertools.combinations(corners, 2):
            edges.append(VenkovEdge(bid, a, b))
    return VenkovGraph(tuple(facets), tuple(edges))


def half_belt_cycles(vg: VenkovGraph) -> list[CycleVector]:
    """One triangle a -> b -> c -> a per belt, using that belt's three edges."""
    by_belt: dict[int, list[int]] = {}
    for k, e in enumerate(vg.edges):
        by_belt.setdefault(e.belt, []).append(k)
    out = []
    for belt in sorted(by_belt):
        ks = by_belt[belt]
        if len(ks) != 3:
            raise ValueError(f"belt {belt} carries {len(ks)} edges, expected 3")
        a, b, c = sorted({vg.edges[k].u for k in ks} | {vg.edges[k].v for k in ks})
        out.append(vg.walk_vector([(belt, a, b), (belt, b, c), (belt, c, a)]))
    return out


def fundamental_cycles(vg: VenkovGraph, edges: Iterable[int] | None = None) -> list[CycleVector]:
    """Cycle basis of the subgraph on ``edges`` from a spanning forest.

    The forest is grown greedily over edges sorted by (endpoints, belt); each
    remaining edge closes one fundamental cycle.
    """
    ks = sorted(range(len(vg.edges)) if edges is None else set(edges), key=lambda k: (vg.edges[k].u, vg.edges[k].v, vg.edges[k].belt))
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: list[int] = []
    chords: list[int] = []
    for k in ks:
        e = vg.edges[k]
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            chords.append(k)
        else:
            parent[ru] = rv
            tree.append(k)

    adj: dict[int, list[tuple[int, int]]] = {}
    for k in tree:
        e = vg.edges[k]
        adj.setdefault(e.u, []).append((e.v, k))
        adj.setdefault(e.v, []).append((e.u, k))

    def tree_path(src: int, dst: int) -> list[tuple[int, int, int]]:
        prev = {src: None}
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                break
            for y, k in adj.get(x, []):
                if y not in prev:
                    prev[y] = (x, k)
                    stack.append(y)
        path = []
        x = dst
        while prev[x] is not None:
            y, k = prev[x]
            path.append((vg.edges[k].belt, y, x))
            x = y
        return path[::-1]

    out = []
    for k in chords:
        e = vg.edges[k]
        steps = [(e.belt, e.u, e.v)] + tree_path(e.v, e.u)
        out.append(vg.walk_vector(steps))
    return out


@dataclass(frozen=True)
class ProjectionSpan:
    edge: tuple[int, int]
    kind: Parallelohedron3Kind | None
    vertices: tuple[int, ...]  # Venkov vertex indices surviving the projection
    edges: tuple[int, ...]
    basis: tuple[CycleVector, ...]


def projection_spans(g: ZonotopeGraph, vg: VenkovGraph | None = None) -> list[ProjectionSpan]:
    """For every zone vector, the Venkov subgraph that survives projecting along it and a basis of its cycles."""
    vg = build_venkov(g) if vg is None else vg
    index = {f: k for k, f in enumerate(vg.vertices)}
    out = []
    for edge in g.sorted_edges:
        image = contract(g, edge)
        kind = classify_3d(image) if image.n == 4 else None
        facets, belts = projection_survivors(g, edge)
        belt_ids = {bid for bid, b in primitive_belts(g) if b in belts}
        verts = tuple(sorted(index[f] for f in facets))
        ks = tuple(k for k, e in enumerate(vg.edges) if e.belt in belt_ids)
        keep = set(verts)
        if any(vg.edges[k].u not in keep or vg.edges[k].v not in keep for k in ks):
            raise AssertionError(f"projection along {edge} keeps an edge without its endpoints")
        out.append(ProjectionSpan(edge, kind, verts, ks, tuple(fundamental_cycles(vg, ks))))
    return out


def _acyclic(nodes: Sequence[int], arcs: Iterable[tuple[int, int]]) -> bool:
    arcs = set(arcs)
    indeg = {v: 0 for v in nodes}
    for _, b in arcs:
        indeg[b] += 1
    queue = [v for v in nodes if indeg[v] == 0]
    seen = 0
    while queue:
        x = queue.pop()
        seen += 1
        for a, b in arcs:
            if a == x:
                indeg[b] -= 1
                if indeg[b] == 0:
                    queue.append(b)
    return seen == len(nodes)


def _quotient_orientation(g: ZonotopeGraph, parts: Sequence[frozenset[int]], orient) -> set[tuple[int, int]] | None:
    """Arcs between ``parts`` induced by an orientation of ``g``; ``None`` if two edges disagree."""
    where = {v: k for k, p in enumerate(parts) for v in p}
    arcs = set()
    for i, j in g.edges:
        a, b = where[i], where[j]
        if a == b:
            continue
        arc = (a, b) if orient[(i, j)] else (b, a)
        if (arc[1], arc[0]) in arcs:
            return None
        arcs.add(arc)
    return arcs


def trivially_contractible_cycles(g: ZonotopeGraph, vg: VenkovGraph | None = None) -> list[CycleVector]:
    """Cycles of facets around every codimension-3 face whose surrounding ridges are all primitive.

    A face of the graphical zonotope is a connected partition of the vertices
    together with an acyclic orientation of the quotient graph; codimension 3
    means four parts.  This builds the cycles straight from the face lattice,
    independently of the projection argument.
    """
    vg = build_venkov(g) if vg is None else vg
    index = {f: k for k, f in enumerate(vg.vertices)}
    belt_id = {b.parts: bid for bid, b in primitive_belts(g)}
    out = []
    if g.n < 4:
        return out
    edges = g.sorted_edges
    for parts in connected_partitions(g, 4):
        where = {v: k for k, p in enumerate(parts) for v in p}
        crossing = [e for e in edges if where[e[0]] != where[e[1]]]
        seen_orients = set()
        for bits in itertools.product((True, False), repeat=len(crossing)):
            orient = dict(zip(crossing, bits))
            arcs = _quotient_orientation(g, parts, orient)
            if arcs is None or not _acyclic(range(4), arcs):
                continue
            key = frozenset(arcs)
            if key in seen_orients:
                continue
            seen_orients.add(key)
            cycle = _cycle_around_face(g, parts, orient, index, belt_id)
            if cycle is not None:
                out.append(vg.walk_vector(cycle))
    return out


def _cycle_around_face(g, parts, orient, index, belt_id):
    # facets through the face: connected bipartitions coarsening ``parts`` with a consistent crossing direction
    facets = {}
    for k in (1, 2):
        for side in itertools.combinations(range(4), k):
            a = frozenset().union(*(parts[x] for x in side))
            fp = FacetPair.of(a, g.vertices)
            if fp in index and _quotient_orientation(g, (fp.first, fp.second), orient) is not None:
                facets[fp] = None
    # ridges through the face: merge two adjacent parts, keep the induced orientation acyclic
    adjacency: dict[FacetPair, list[tuple[FacetPair, int | None]]] = {f: [] for f in facets}
    for x, y in itertools.combinations(range(4), 2):
        merged = parts[x] | parts[y]
        if not g.induces_connected(merged):
            continue
        tri = tuple(sorted([merged] + [parts[z] for z in range(4) if z not in (x, y)], key=min))
        arcs = _quotient_orientation(g, tri, orient)
        if arcs is None or not _acyclic(range(3), arcs):
            continue
        on = [f for f in facets if f.refined_by(tri)]
        if len(on) != 2:
            raise AssertionError(f"ridge {tri} lies in {len(on)} facets at a codimension-3 face")
        bid = belt_id.get(tri)
        adjacency[on[0]].append((on[1], bid))
        adjacency[on[1]].append((on[0], bid))
    if any(bid is None for nbrs in adjacency.values() for _, bid in nbrs):
        return None  # a non-primitive ridge touches this face
    if any(len(nbrs) != 2 for nbrs in adjacency.values()):
        raise AssertionError("facets around a codimension-3 face do not form a cycle")
    start = min(facets, key=lambda f: index[f])
    steps = []
    prev, cur = None, start
    while True:
        nxt, bid = next((f, b) for f, b in adjacency[cur] if f != prev) if prev is not None else adjacency[cur][0]
        steps.append((bid, index[cur], index[nxt]))
        prev, cur = cur, nxt
        if cur == start:
            break
    if len(steps) != len(facets):
        raise AssertionError("facets around a codimension-3 face split into several cycles")
    return steps


@dataclass
class GainReport:
    cycle_dim: int
    gain_rank: int
    passed: bool
    vertices: int = 0
    edges: int = 0
    half_belt_rank: int | None = 0
    method: str = "projection"
    projections: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "cycle_dim": self.cycle_dim,
            "gain_rank": self.gain_rank,
            "half_belt_rank": self.half_belt_rank,
            "method": self.method,
            "pass": self.passed,
            "projections": self.projections,
            "venkov": {"V": self.vertices, "E": self.edges},
        }
        out.update(self.extra)
        return out


def stacked_rank(vg: VenkovGraph, rows: Sequence[CycleVector], bound: int | None = None) -> int:
    """Rational rank of cycle vectors.

    Every row is checked to be a cycle, so the rank is at most ``bound``
    (the cycle dimension).  A modular rank reaching that bound is therefore
    exact; otherwise the rank is recomputed over the integers.
    """
    for r in rows:
        if not vg.is_cycle(r):
            raise AssertionError("gain vector with nonzero boundary")
    if not rows:
        return 0
    bound = vg.cycle_dim() if bound is None else bound
    r = rank_mod_p(rows, len(vg.edges), stop_at=bound)
    if r == bound:
        return r
    return integer_rank(rows, len(vg.edges))


def check_gain_generation(g: ZonotopeGraph, method: str | None = None) -> GainReport:
    """Do half-belt and trivially contractible cycles span the cycle space of the Venkov graph?

    ``method="projection"`` (the default for five-vertex graphs) takes, for
    every zone vector, the full cycle space of the Venkov subgraph surviving
    the projection along it.  ``method="direct"`` builds trivially
    contractible cycles from the face lattice; it is the default for the
    lower-dimensional blocks of reducible graphs.
    """
    if method is None:
        method = "projection" if g.n == 5 else "direct"
    vg = build_venkov(g)
    halves = half_belt_cycles(vg)
    rows = list(halves)
    projections = []
    if method == "projection":
        for span in projection_spans(g, vg):
            rows.extend(span.basis)
            projections.append(
                {
                    "edge": list(span.edge),
                    "kind": span.kind.value if span.kind else None,
                    "facets": [k + 1 for k in span.vertices],
                    "basis_size": len(span.basis),
                }
            )
    elif method == "direct":
        rows.extend(trivially_contractible_cycles(g, vg))
    else:
        raise ValueError(f"unknown method {method!r}")
    dim = vg.cycle_dim()
    gain = stacked_rank(vg, rows, dim)
    return GainReport(
        cycle_dim=dim,
        gain_rank=gain,
        passed=gain == dim,
        vertices=len(vg.vertices),
        edges=len(vg.edges),
        half_belt_rank=stacked_rank(vg, halves, dim),
        method=method,
        projections=projections,
    )
