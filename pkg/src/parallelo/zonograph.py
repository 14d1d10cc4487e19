"""Graph calculus for Pi-zonotopes.

A connected simple graph on vertices ``1..n`` stands for the zonotope whose
zone vectors are ``e_i - e_j``, one per edge ``{i, j}``.  Facet pairs, belts,
projections along zone vectors and direct-product splittings of that
zonotope are all read off the graph.
"""

from __future__ import annotations

import enum
import itertools
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph: disconnected, loops, bad labels, missing edge..."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _norm_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def _connected(vertices: frozenset[int], edges: Iterable[Edge]) -> bool:
    if not vertices:
        return False
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for i, j in edges:
        if i in adj and j in adj:
            adj[i].add(j)
            adj[j].add(i)
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


@dataclass(frozen=True)
class ZonotopeGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {i}-{j} is not a pair of distinct labels in 1..{self.n}")
        if not _connected(self.vertices, self.edges):
            raise GraphError("graph not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "ZonotopeGraph":
        seen: set[Edge] = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            key = _norm_edge(i, j)
            if key in seen:
                raise GraphError(f"parallel edge {key[0]}-{key[1]}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def induces_connected(self, part: Iterable[int]) -> bool:
        return _connected(frozenset(part), self.edges)

    def joined(self, a: frozenset[int], b: frozenset[int]) -> bool:
        return any((i in a and j in b) or (i in b and j in a) for i, j in self.edges)

    def to_text(self) -> str:
        return f"n={self.n}; edges=" + ",".join(f"{i}-{j}" for i, j in self.sorted_edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    def __str__(self) -> str:
        return self.to_text()


_ITEM = re.compile(r"\s*([A-Za-z]+)\s*=\s*([^;]*)")
_EDGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_graph(text: str) -> ZonotopeGraph:
    """Parse ``n=5; edges=1-2,2-3`` or the JSON form ``{"n": 5, "edges": [[1, 2], ...]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphParseError('JSON graph needs keys "n" and "edges"')
        try:
            return ZonotopeGraph.from_edges(int(data["n"]), data["edges"])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphParseError(f"bad JSON graph: {exc}") from None

    fields: dict[str, tuple[str, int]] = {}
    pos = 0
    for chunk in text.split(";"):
        if chunk.strip():
            m = _ITEM.fullmatch(chunk)
            if not m:
                lead = len(chunk) - len(chunk.lstrip())
                raise GraphParseError(f"expected key=value, got {chunk.strip()!r}", *_position(text, pos + lead))
            fields[m.group(1).lower()] = (m.group(2), pos + m.start(2))
        pos += len(chunk) + 1
    for key in ("n", "edges"):
        if key not in fields:
            raise GraphParseError(f"missing field {key!r}", *_position(text, len(text)))
    n_text, n_at = fields["n"]
    if not n_text.strip().isdigit():
        raise GraphParseError(f"n must be a positive integer, got {n_text.strip()!r}", *_position(text, n_at))
    edges = []
    e_text, at = fields["edges"]
    for token in e_text.split(","):
        m = _EDGE.match(token)
        if not m:
            raise GraphParseError(f"bad edge {token.strip()!r}", *_position(text, at + len(token) - len(token.lstrip())))
        edges.append((int(m.group(1)), int(m.group(2))))
        at += len(token) + 1
    return ZonotopeGraph.from_edges(int(n_text), edges)


@dataclass(frozen=True)
class FacetPair:
    """A pair of opposite facets: a connected bipartition of the vertices.

    ``first`` is the part holding the smallest vertex label.
    """

    first: frozenset[int]
    second: frozenset[int]

    @classmethod
    def of(cls, part: Iterable[int], vertices: frozenset[int]) -> "FacetPair":
        a = frozenset(part)
        b = vertices - a
        return cls(a, b) if min(vertices) in a else cls(b, a)

    @property
    def sort_key(self):
        return (len(self.first), sorted(self.first))

    def keeps_together(self, i: int, j: int) -> bool:
        return (i in self.first) == (j in self.first)

    def refined_by(self, parts: Iterable[frozenset[int]]) -> bool:
        return all(p <= self.first or p <= self.second for p in parts)

    def label(self) -> str:
        return f"{_fmt(self.first)} and {_fmt(self.second)}"


def _fmt(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


@dataclass(frozen=True)
class Belt:
    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]
    primitive: bool
    facets: tuple[FacetPair, ...]

    @property
    def sort_key(self):
        return tuple((len(p), sorted(p)) for p in self.parts[:2])

    def keeps_together(self, i: int, j: int) -> bool:
        return any(i in p and j in p for p in self.parts)

    def label(self) -> str:
        return ", ".join(_fmt(p) for p in self.parts)


def _ordered_parts(parts: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    # each part is keyed by its smallest vertex, which reproduces the usual listing order
    return tuple(sorted(parts, key=min))


def _set_partitions(items: list[int], k: int) -> Iterator[list[list[int]]]:
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for p in _set_partitions(rest, k - 1):
        yield [[first]] + p
    for p in _set_partitions(rest, k):
        for idx in range(len(p)):
            yield p[:idx] + [[first] + p[idx]] + p[idx + 1 :]


def connected_partitions(g: ZonotopeGraph, k: int) -> list[tuple[frozenset[int], ...]]:
    out = []
    for p in _set_partitions(sorted(g.vertices), k):
        parts = [frozenset(x) for x in p]
        if all(g.induces_connected(x) for x in parts):
            out.append(_ordered_parts(parts))
    return out


def enumerate_facets(g: ZonotopeGraph) -> list[FacetPair]:
    """All connected bipartitions, ordered by the size and then the contents of the part holding vertex 1."""
    facets = [FacetPair(a, b) for a, b in connected_partitions(g, 2)]
    return sorted(facets, key=lambda f: f.sort_key)


def enumerate_belts(g: ZonotopeGraph) -> list[Belt]:
    facets = enumerate_facets(g)
    index = {f: k for k, f in enumerate(facets)}
    belts = []
    for parts in connected_partitions(g, 3):
        merges = []
        for x, y in itertools.combinations(range(3), 2):
            merged = parts[x] | parts[y]
            if g.induces_connected(merged):
                merges.append(FacetPair.of(merged, g.vertices))
        merges.sort(key=index.__getitem__)
        primitive = all(g.joined(a, b) for a, b in itertools.combinations(parts, 2))
        belts.append(Belt(parts, primitive, tuple(merges)))
        if primitive != (len(merges) == 3) or len(merges) not in (2, 3):
            raise AssertionError(f"belt {belts[-1].label()} has {len(merges)} facets")
    return sorted(belts, key=lambda b: b.sort_key)


def _check_edge(g: ZonotopeGraph, edge) -> Edge:
    i, j = edge
    if not g.has_edge(i, j):
        raise GraphError(f"edge {i}-{j} is not in the graph")
    return _norm_edge(i, j)


def contract(g: ZonotopeGraph, edge) -> ZonotopeGraph:
    """Glue the endpoints of ``edge``; loops are dropped and parallel edges merged.

    The glued vertex takes the smaller label and the rest are renumbered
    ``1..n-1`` in their original order.
    """
    i, j = _check_edge(g, edge)
    relabel = {}
    for v in sorted(g.vertices - {j}):
        relabel[v] = len(relabel) + 1
    relabel[j] = relabel[i]
    edges = {_norm_edge(relabel[a], relabel[b]) for a, b in g.edges if relabel[a] != relabel[b]}
    return ZonotopeGraph(g.n - 1, frozenset(edges))


class Parallelohedron3Kind(enum.Enum):
    TRUNCATED_OCTAHEDRON = "truncated octahedron"
    ELONGATED_DODECAHEDRON = "elongated dodecahedron"
    RHOMBIC_DODECAHEDRON = "rhombic dodecahedron"
    HEXAGONAL_PRISM = "hexagonal prism"
    CUBE = "cube"


def classify_3d(g4: ZonotopeGraph) -> Parallelohedron3Kind:
    if g4.n != 4:
        raise GraphError(f"three-dimensional Pi-zonotopes have 4 vertices, got {g4.n}")
    m = len(g4.edges)
    if m == 6:
        return Parallelohedron3Kind.TRUNCATED_OCTAHEDRON
    if m == 5:
        return Parallelohedron3Kind.ELONGATED_DODECAHEDRON
    if m == 3:
        return Parallelohedron3Kind.CUBE
    has_triangle = any(
        g4.has_edge(a, b) and g4.has_edge(b, c) and g4.has_edge(a, c)
        for a, b, c in itertools.combinations(range(1, 5), 3)
    )
    return Parallelohedron3Kind.HEXAGONAL_PRISM if has_triangle else Parallelohedron3Kind.RHOMBIC_DODECAHEDRON


def projection_survivors(g: ZonotopeGraph, edge) -> tuple[list[FacetPair], list[Belt]]:
    """Facet pairs and primitive belts that do not separate the endpoints of ``edge``."""
    i, j = _check_edge(g, edge)
    facets = [f for f in enumerate_facets(g) if f.keeps_together(i, j)]
    belts = [b for b in enumerate_belts(g) if b.primitive and b.keeps_together(i, j)]
    return facets, belts


def circuits(g: ZonotopeGraph) -> list[frozenset[Edge]]:
    """Edge sets of all simple cycles (the circuits of the graphic matroid)."""
    out = []
    edges = g.sorted_edges
    for k in range(3, len(edges) + 1):
        for subset in itertools.combinations(edges, k):
            deg: dict[int, int] = {}
            for a, b in subset:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if all(d == 2 for d in deg.values()) and _connected(frozenset(deg), subset):
                out.append(frozenset(subset))
    return out


def reducibility(g: ZonotopeGraph) -> list[frozenset[Edge]]:
    """Blocks of ``g``: maximal edge sets in which any two edges share a cycle.

    One block means the zonotope is irreducible; otherwise it is the direct
    product of the zonotopes of the blocks.
    """
    parent = {e: e for e in g.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for c in circuits(g):
        first, *rest = sorted(c)
        for e in rest:
            parent[find(e)] = find(first)
    groups: dict[Edge, set[Edge]] = {}
    for e in g.edges:
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(s) for s in groups.values()), key=lambda s: sorted(s))


def block_graph(block: Iterable[Edge]) -> ZonotopeGraph:
    """A block as a standalone graph, vertices renumbered in increasing order."""
    block = list(block)
    verts = sorted({v for e in block for v in e})
    relabel = {v: k + 1 for k, v in enumerate(verts)}
    return ZonotopeGraph(len(verts), frozenset(_norm_edge(relabel[a], relabel[b]) for a, b in block))


def canonical_form(g: ZonotopeGraph) -> tuple[Edge, ...]:
    """Lexicographically least sorted edge list over all relabelings (brute force, n <= 6)."""
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        image = tuple(sorted(_norm_edge(perm[a - 1], perm[b - 1]) for a, b in g.edges))
        if best is None or image < best:
            best = image
    return best


def isomorphic(g: ZonotopeGraph, h: ZonotopeGraph) -> bool:
    return g.n == h.n and len(g.edges) == len(h.edges) and canonical_form(g) == canonical_form(h)


def enumerate_candidate_graphs(n: int = 5) -> list[ZonotopeGraph]:
    """One connected simple graph per isomorphism class on ``n`` vertices.

    Ordered by edge count, then canonical edge list.
    """
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    seen: dict[tuple[Edge, ...], ZonotopeGraph] = {}
    for k in range(n - 1, len(all_edges) + 1):
        for subset in itertools.combinations(all_edges, k):
            if not _connected(frozenset(range(1, n + 1)), subset):
                continue
            g = ZonotopeGraph(n, frozenset(subset))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = ZonotopeGraph(n, frozenset(key))
    return sorted(seen.values(), key=lambda g: (len(g.edges), g.sorted_edges))


def is_all_primitive(g: ZonotopeGraph) -> bool:
    """Every belt has six facets (and there is at least one belt)."""
    belts = enumerate_belts(g)
    return bool(belts) and all(b.primitive for b in belts)


EXAMPLE_GRAPH = ZonotopeGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 5)])
