"""Exact zonotope combinatorics from generators.

Facets and belts of a zonotope are read off the lattice of flats of its
generators: a pair of opposite facets for every hyperplane spanned by
generators, a belt for every codimension-2 flat.  No vertex enumeration is
needed.  This module shares no code with the graph rules in
:mod:`parallelo.zonograph`, so it can be used to check them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .linalg import RatMatrix, as_rational, format_rational, inverse, nullspace, primitive_integer, rank
from .zonograph import ZonotopeGraph, enumerate_belts, enumerate_facets

Vector = tuple[Fraction, ...]


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        if not self.vectors:
            raise OracleError("empty generator set")
        dims = {len(v) for v in self.vectors}
        if len(dims) != 1:
            raise OracleError("generators live in different dimensions")
        for k, v in enumerate(self.vectors):
            if not any(v):
                raise OracleError(f"generator {k} is zero")
        for a, b in itertools.combinations(range(len(self.vectors)), 2):
            if rank([self.vectors[a], self.vectors[b]]) < 2:
                raise OracleError(f"generators {a} and {b} are parallel")

    @classmethod
    def of(cls, vectors: Iterable[Sequence]) -> "GeneratorSet":
        return cls(tuple(tuple(as_rational(x) for x in v) for v in vectors))

    @property
    def ambient(self) -> int:
        return len(self.vectors[0])

    @cached_property
    def rank(self) -> int:
        return rank(self.vectors)

    def rank_of(self, idx: Iterable[int]) -> int:
        vecs = [self.vectors[k] for k in idx]
        return rank(vecs) if vecs else 0

    def closure(self, idx: Iterable[int]) -> frozenset[int]:
        idx = list(idx)
        r = self.rank_of(idx)
        return frozenset(k for k in range(len(self.vectors)) if k in idx or self.rank_of(idx + [k]) == r)

    def flats(self, r: int) -> list[frozenset[int]]:
        """All flats of rank ``r``, sorted by their sorted member lists."""
        found = set()
        for idx in itertools.combinations(range(len(self.vectors)), r):
            if self.rank_of(idx) == r:
                found.add(self.closure(idx))
        return sorted(found, key=sorted)

    def transformed(self, matrix: Sequence[Sequence]) -> "GeneratorSet":
        m = RatMatrix.from_rows(matrix)
        return GeneratorSet(tuple(tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in m.rows) for v in self.vectors))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in v] for v in self.vectors]


@dataclass(frozen=True)
class FacetClass:
    members: frozenset[int]  # generators parallel to the facets
    normal: tuple[int, ...]  # the facet functional evaluated on each generator, primitive, up to sign


@dataclass(frozen=True)
class BeltClass:
    flat: frozenset[int]
    belt_size: int
    facets: tuple[int, ...]  # indices into oracle_facets


def pi_generators(g: ZonotopeGraph) -> GeneratorSet:
    """Zone vectors ``e_i - e_j`` in R^n, one per edge in sorted edge order."""
    vecs = []
    for i, j in g.sorted_edges:
        v = [0] * g.n
        v[i - 1], v[j - 1] = 1, -1
        vecs.append(v)
    return GeneratorSet.of(vecs)


def _require_rank(gens: GeneratorSet) -> None:
    if gens.rank < 2:
        raise OracleError(f"zonotope of dimension {gens.rank} has no ridges")


def oracle_facets(gens: GeneratorSet) -> list[FacetClass]:
    _require_rank(gens)
    out = []
    for flat in gens.flats(gens.rank - 1):
        rows = [gens.vectors[k] for k in flat]
        for n in nullspace(rows):
            values = [sum((a * b for a, b in zip(n, v)), Fraction(0)) for v in gens.vectors]
            if any(values):
                out.append(FacetClass(flat, primitive_integer(values)))
                break
        else:
            raise AssertionError("hyperplane flat without a normal")
    return out


def _direction_classes(gens: GeneratorSet, flat: frozenset[int]) -> list[list[int]]:
    """Generators outside ``flat`` grouped by direction modulo the flat."""
    base = list(flat)
    r = gens.rank_of(base)
    classes: list[list[int]] = []
    for k in range(len(gens.vectors)):
        if k in flat:
            continue
        for cls in classes:
            if gens.rank_of(base + [cls[0], k]) == r + 1:
                cls.append(k)
                break
        else:
            classes.append([k])
    return classes


def oracle_belts(gens: GeneratorSet, facets: list[FacetClass] | None = None) -> list[BeltClass]:
    _require_rank(gens)
    facets = oracle_facets(gens) if facets is None else facets
    out = []
    for flat in gens.flats(gens.rank - 2):
        size = 2 * len(_direction_classes(gens, flat))
        members = tuple(k for k, f in enumerate(facets) if flat <= f.members)
        if 2 * len(members) != size:
            raise AssertionError(f"belt over flat {sorted(flat)}: {size} directions but {len(members)} facet pairs")
        out.append(BeltClass(flat, size, members))
    return out


K33_EDGES = tuple((a, b) for a in ("a1", "a2", "a3") for b in ("b1", "b2", "b3"))
K33_TREE = (("a1", "b1"), ("a1", "b2"), ("a1", "b3"), ("a2", "b1"), ("a3", "b1"))


def k33_cycle_basis() -> list[list[int]]:
    """Fundamental cycles of K_{3,3} for a fixed spanning tree; edges oriented a -> b."""
    tree = nx.Graph(K33_TREE)
    basis = []
    for chord in K33_EDGES:
        if chord in K33_TREE:
            continue
        a, b = chord
        path = nx.shortest_path(tree, b, a)  # b -> ... -> a closes the chord a -> b
        vec = [0] * len(K33_EDGES)
        vec[K33_EDGES.index(chord)] = 1
        for x, y in zip(path, path[1:]):
            if (x, y) in K33_EDGES:
                vec[K33_EDGES.index((x, y))] += 1
            else:
                vec[K33_EDGES.index((y, x))] -= 1
        basis.append(vec)
    return basis


def k33_generators() -> GeneratorSet:
    """Edge indicators of K_{3,3} orthogonally projected onto its cycle space.

    Coordinates are taken in the fundamental-cycle basis ``C``: edge ``k``
    maps to ``(C C^T)^{-1} C e_k``.
    """
    c = RatMatrix.from_rows(k33_cycle_basis())
    gram_inv = inverse(c @ c.transpose())
    coords = gram_inv @ c
    return GeneratorSet(tuple(tuple(col) for col in coords.transpose().rows))


def graph_crosscheck(g: ZonotopeGraph) -> dict:
    """Match the graph rules for facets and belts against the oracle for one graph."""
    gens = pi_generators(g)
    edges = g.sorted_edges
    facets = oracle_facets(gens)
    belts = oracle_belts(gens, facets)
    g_facets = enumerate_facets(g)
    g_belts = enumerate_belts(g)

    def inside(parts) -> frozenset[int]:
        return frozenset(k for k, (i, j) in enumerate(edges) if any(i in p and j in p for p in parts))

    by_members = {f.members: k for k, f in enumerate(facets)}
    facet_map = {}
    for k, f in enumerate(g_facets):
        facet_map[k] = by_members.get(inside((f.first, f.second)))
    facet_ok = len(facets) == len(g_facets) and sorted(v for v in facet_map.values() if v is not None) == list(range(len(facets)))

    by_flat = {b.flat: b for b in belts}
    belt_ok = len(belts) == len(g_belts)
    for b in g_belts:
        ob = by_flat.get(inside(b.parts))
        if ob is None or (ob.belt_size == 6) != b.primitive:
            belt_ok = False
            continue
        g_members = sorted(facet_map[g_facets.index(f)] for f in b.facets)
        if g_members != sorted(ob.facets):
            belt_ok = False
    sizes = sorted((b.belt_size for b in belts), reverse=True)
    return {
        "graph": g.to_text(),
        "facets": {"graph": len(g_facets), "oracle": len(facets)},
        "belts": {"graph": len(g_belts), "oracle": len(belts), "sizes": sizes},
        "facet_bijection": facet_ok,
        "belt_bijection": belt_ok,
        "belt_size_law": all(s in (4, 6) for s in sizes),
        "pass": facet_ok and belt_ok and all(s in (4, 6) for s in sizes),
    }


def incidence_structure(gens: GeneratorSet) -> nx.Graph:
    """Zone / facet-pair / belt incidence graph; belt nodes carry their size.

    Zones are needed: facets and belts alone do not tell K_{2,3} from
    K_{1,1,3}.
    """
    facets = oracle_facets(gens)
    belts = oracle_belts(gens, facets)
    h = nx.Graph()
    for k in range(len(gens.vectors)):
        h.add_node(("z", k), kind="zone")
    for k, f in enumerate(facets):
        h.add_node(("F", k), kind="facet")
        for z in f.members:
            h.add_edge(("F", k), ("z", z))
    for k, b in enumerate(belts):
        h.add_node(("B", k), kind=f"belt{b.belt_size}")
        for f in b.facets:
            h.add_edge(("B", k), ("F", f))
    return h


def matroid_structure(gens: GeneratorSet) -> nx.Graph:
    """Element / circuit incidence graph of the generators' vector matroid."""
    m = len(gens.vectors)
    circuits = []
    for k in range(1, gens.rank + 2):
        for idx in itertools.combinations(range(m), k):
            if gens.rank_of(idx) == k - 1 and all(gens.rank_of(idx[:i] + idx[i + 1 :]) == k - 1 for i in range(k)):
                circuits.append(idx)
    h = nx.Graph()
    for k in range(m):
        h.add_node(("e", k), kind="element")
    for c, idx in enumerate(circuits):
        h.add_node(("c", c), kind="circuit")
        for k in idx:
            h.add_edge(("c", c), ("e", k))
    return h


def _group(structures: list[nx.Graph], invariant) -> list[list[int]]:
    match = nx.algorithms.isomorphism.categorical_node_match("kind", None)
    groups: list[list[int]] = []
    for k, h in enumerate(structures):
        for grp in groups:
            rep = structures[grp[0]]
            if invariant(rep) == invariant(h) and nx.is_isomorphic(rep, h, node_match=match):
                grp.append(k)
                break
        else:
            groups.append([k])
    return groups


def _signature(h: nx.Graph):
    return sorted((d["kind"], h.degree(n)) for n, d in h.nodes(data=True))


def zonotope_classes(graphs: Sequence[ZonotopeGraph]) -> list[list[int]]:
    """Group graphs whose zonotopes have the same belt sizes and facet/belt incidences.

    Returns lists of indices into ``graphs``, in order of first appearance.
    """
    return _group([incidence_structure(pi_generators(g)) for g in graphs], _signature)


def matroid_classes(graphs: Sequence[ZonotopeGraph]) -> list[list[int]]:
    """Same grouping by graphic-matroid isomorphism; used to cross-check `zonotope_classes`."""
    return _group([matroid_structure(pi_generators(g)) for g in graphs], _signature)
