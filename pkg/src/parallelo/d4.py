"""The Delone tiling of D4 by regular crosspolytopes and its refinements.

The tiling has three translation classes of crosspolytopes.  Refinements
slice some of them with lattice-periodic families of hyperplanes through
their equators.  Only the star of the origin is modelled: the tiles having
the origin as a vertex, and the faces of those tiles through the origin.
Lattice translations carry this star to every other vertex.

All coordinates are exact (``Fraction``); polytopes have at most 8 vertices,
so face lattices are found by brute force over vertex subsets.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .linalg import primitive_integer, rank
from .venkov import GainReport, VenkovGraph, half_belt_cycles, stacked_rank

Point = tuple[Fraction, ...]
ORIGIN = (0, 0, 0, 0)
FAMILIES = ("F1", "F2", "F3")

D4_BASIS = ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))


class InadmissibleError(ValueError):
    """A slice or slicing configuration breaks the refinement rules."""


def pt(*xs) -> Point:
    return tuple(Fraction(x) for x in xs)


def add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def neg(p: Point) -> Point:
    return tuple(-a for a in p)


def dot(n: Sequence, p: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(n, p)), Fraction(0))


def in_d4(p: Point) -> bool:
    return all(x.denominator == 1 for x in p) and sum(p) % 2 == 0


def affine_dim(points: Sequence[Point]) -> int:
    points = list(points)
    if not points:
        return -1
    return rank([sub(p, points[0]) for p in points[1:]]) if len(points) > 1 else 0


def fmt_point(p: Point) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _cross(u: Point, v: Point, w: Point) -> tuple[Fraction, ...]:
    """Vector orthogonal to u, v, w in R^4 (cofactor expansion)."""
    rows = (u, v, w)
    out = []
    for i in range(4):
        cols = [c for c in range(4) if c != i]
        m = [[r[c] for c in cols] for r in rows]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        out.append(det if i % 2 == 0 else -det)
    return tuple(out)


@dataclass(frozen=True)
class Polytope:
    """A full-dimensional polytope in R^4 given by a point set (not necessarily all extreme)."""

    points: tuple[Point, ...]

    @classmethod
    def of(cls, points: Iterable[Point]) -> "Polytope":
        return cls(tuple(sorted(set(points))))

    @cached_property
    def facets(self) -> list[tuple[frozenset[Point], tuple[Fraction, ...], Fraction]]:
        """(points on the facet, outward normal, offset) with ``normal . x <= offset`` inside."""
        if affine_dim(self.points) != 4:
            raise ValueError("polytope is not full-dimensional")
        found = {}
        for quad in itertools.combinations(self.points, 4):
            p0 = quad[0]
            n = _cross(sub(quad[1], p0), sub(quad[2], p0), sub(quad[3], p0))
            if not any(n):
                continue
            c = dot(n, p0)
            vals = [dot(n, p) for p in self.points]
            if all(v <= c for v in vals):
                pass
            elif all(v >= c for v in vals):
                n, c, vals = tuple(-x for x in n), -c, [-v for v in vals]
            else:
                continue
            on = frozenset(p for p, v in zip(self.points, vals) if v == c)
            if on not in found:
                found[on] = (on, n, c)
        return sorted(found.values(), key=lambda f: sorted(f[0]))

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        out = []
        for p in self.points:
            common = frozenset(self.points)
            for on, _, _ in self.facets:
                if p in on:
                    common &= on
            if common == {p}:
                out.append(p)
        return tuple(out)

    @cached_property
    def faces(self) -> dict[int, list[frozenset[Point]]]:
        """Faces by dimension, as vertex sets; dimension 4 is the polytope itself."""
        verts = frozenset(self.vertices)
        found = {on & verts for on, _, _ in self.facets}
        frontier = set(found)
        while frontier:
            new = set()
            for a in frontier:
                for b in found:
                    c = a & b
                    if c and c not in found:
                        new.add(c)
            found |= new
            frontier = new
        found.add(verts)
        out: dict[int, list[frozenset[Point]]] = {d: [] for d in range(5)}
        for f in found:
            out[affine_dim(sorted(f))].append(f)
        for d in out:
            out[d].sort(key=sorted)
        return out

    def contains(self, x: Point) -> bool:
        return all(dot(n, x) <= c for _, n, c in self.facets)

    def translate(self, t: Point) -> "Polytope":
        return Polytope.of(add(p, t) for p in self.vertices)


def polyhedron_type(face: frozenset[Point], two_faces: Iterable[frozenset[Point]]) -> str:
    sides = sorted(len(f) for f in two_faces if f <= face)
    nv = len(face)
    if nv == 4:
        return "tetrahedron"
    if nv == 5 and sides.count(4) == 1 and sides.count(3) == 4:
        return "square pyramid"
    if nv == 6 and sides == [3] * 8:
        return "octahedron"
    return f"{nv}-vertex polyhedron"


@dataclass(frozen=True)
class CrossFamily:
    id: str
    center: Point
    vertices: tuple[Point, ...]  # listed so that opposite vertices are consecutive pairs

    @cached_property
    def pairs(self) -> tuple[tuple[Point, Point], ...]:
        return tuple((self.vertices[k], self.vertices[k + 1]) for k in range(0, 8, 2))

    @cached_property
    def polytope(self) -> Polytope:
        return Polytope.of(self.vertices)


def _family(fid: str, center, verts) -> CrossFamily:
    f = CrossFamily(fid, pt(*center), tuple(pt(*v) for v in verts))
    for p, q in f.pairs:
        if add(p, q) != tuple(2 * x for x in f.center):
            raise AssertionError(f"{fid}: {p} and {q} are not opposite")
    return f


CROSS_FAMILIES: dict[str, CrossFamily] = {
    "F1": _family(
        "F1",
        (1, 0, 0, 0),
        [(0, 0, 0, 0), (2, 0, 0, 0), (1, 1, 0, 0), (1, -1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0), (1, 0, 0, 1), (1, 0, 0, -1)],
    ),
    "F2": _family(
        "F2",
        (Fraction(1, 2),) * 4,
        [(0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 0, 0), (0, 0, 1, 1), (1, 0, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1), (0, 1, 1, 0)],
    ),
    "F3": _family(
        "F3",
        (Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
        [(0, 0, 0, 0), (-1, 1, 1, 1), (-1, 1, 0, 0), (0, 0, 1, 1), (-1, 0, 1, 0), (0, 1, 0, 1), (-1, 0, 0, 1), (0, 1, 1, 0)],
    ),
}


@dataclass(frozen=True)
class HyperplaneFamily:
    """Hyperplanes ``normal . x = base + k * step`` for all integers k."""

    family: str  # crosspolytope family it is built for
    pair: int  # the opposite-vertex pair of the representative it separates
    normal: tuple[int, ...]
    base: int
    step: int

    def offsets_between(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        """Member offsets strictly inside (lo, hi)."""
        k = (lo - self.base) // self.step
        out = []
        while self.base + k * self.step < hi:
            o = Fraction(self.base + k * self.step)
            if o > lo:
                out.append(o)
            k += 1
        return out

    def to_json(self) -> dict:
        return {"family": self.family, "pair": self.pair, "normal": list(self.normal), "offsets": f"{self.base} + {self.step}Z"}


def _equator_status(h: HyperplaneFamily, cross: CrossFamily) -> str:
    """'equator' if exactly one member cuts ``cross`` through an equator, 'none' if no member meets its interior."""
    vals = [dot(h.normal, v) for v in cross.vertices]
    cuts = h.offsets_between(min(vals), max(vals))
    if not cuts:
        return "none"
    if len(cuts) > 1:
        return "several"
    o = cuts[0]
    on = [v for v, x in zip(cross.vertices, vals) if x == o]
    off = [(p, q) for p, q in cross.pairs if dot(h.normal, p) != o or dot(h.normal, q) != o]
    if len(on) == 6 and len(off) == 1:
        p, q = off[0]
        if (dot(h.normal, p) - o) * (dot(h.normal, q) - o) < 0:
            return "equator"
    return "improper"


def candidate_families(fid: str) -> list[HyperplaneFamily]:
    """Extend the equator hyperplane of each opposite pair of the representative periodically over D4."""
    cross = CROSS_FAMILIES[fid]
    out = []
    for k, (p, q) in enumerate(cross.pairs):
        n = primitive_integer(sub(q, p))
        base = dot(n, cross.center)
        step = gcd(*(int(dot(n, b)) for b in D4_BASIS))
        if base.denominator != 1:
            raise AssertionError(f"equator offset {base} is not an integer")
        out.append(HyperplaneFamily(fid, k, n, int(base) % step, step))
    return out


def admissibility(h: HyperplaneFamily) -> dict[str, str]:
    return {fid: _equator_status(h, CROSS_FAMILIES[fid]) for fid in FAMILIES}


def is_admissible(h: HyperplaneFamily) -> bool:
    status = admissibility(h)
    return all(s == ("equator" if fid == h.family else "none") for fid, s in status.items())


@lru_cache(maxsize=None)
def admissible_families(fid: str) -> tuple[HyperplaneFamily, ...]:
    """Hyperplane families slicing every crosspolytope of ``fid`` through an equator and meeting no other tile's interior."""
    return tuple(h for h in candidate_families(fid) if is_admissible(h))


def _cut_plane(h: HyperplaneFamily) -> tuple[tuple[int, ...], Fraction]:
    cross = CROSS_FAMILIES[h.family]
    if _equator_status(h, cross) != "equator":
        raise InadmissibleError(f"hyperplane family {h.normal} does not cut {h.family} through an equator")
    return h.normal, dot(h.normal, cross.center)


@lru_cache(maxsize=None)
def slice_pieces(fid: str, chosen: tuple[int, ...]) -> tuple[Polytope, ...]:
    """Pieces of the representative crosspolytope of ``fid`` cut by the chosen admissible families (by index)."""
    families = admissible_families(fid)
    planes = [_cut_plane(families[k]) for k in chosen]
    return _pieces(CROSS_FAMILIES[fid].polytope, planes)


def _pieces(poly: Polytope, planes: Sequence[tuple[Sequence[int], Fraction]]) -> tuple[Polytope, ...]:
    # candidate points: vertices, plus every point where some face meets as many planes as its dimension
    candidates = set(poly.vertices)
    for d in range(1, 5):
        for face in poly.faces[d]:
            pts = sorted(face)
            base = pts[0]
            span = [sub(p, base) for p in pts[1:]]
            basis = []
            for v in span:
                if rank(basis + [v]) > len(basis):
                    basis.append(v)
            for subset in itertools.combinations(planes, d):
                x = _solve_on_flat(base, basis, subset)
                if x is not None and poly.contains(x):
                    candidates.add(x)
    pieces = []
    for signs in itertools.product((1, -1), repeat=len(planes)):
        keep = [x for x in candidates if all(s * (dot(n, x) - o) >= 0 for s, (n, o) in zip(signs, planes))]
        if affine_dim(keep) == 4:
            pieces.append(Polytope.of(keep))
    return tuple(sorted(pieces, key=lambda p: p.vertices))


def _solve_on_flat(base: Point, basis: list[Point], planes) -> Point | None:
    """The unique point of ``base + span(basis)`` on all ``planes``, if there is exactly one."""
    d = len(basis)
    rows = [[dot(n, b) for b in basis] + [o - dot(n, base)] for n, o in planes]
    if len(rows) != d:
        return None
    # Gaussian elimination on a d x d system
    m = [list(r) for r in rows]
    for c in range(d):
        piv = next((r for r in range(c, d) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        for r in range(d):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    coef = [m[c][d] / m[c][c] for c in range(d)]
    x = base
    for a, b in zip(coef, basis):
        x = add(x, tuple(a * y for y in b))
    return x


def _new_faces(fid: str, chosen: tuple[int, ...]) -> dict[int, set[frozenset[Point]]]:
    old = CROSS_FAMILIES[fid].polytope.faces
    old_sets = {d: set(old[d]) for d in range(4)}
    new: dict[int, set[frozenset[Point]]] = {d: set() for d in range(4)}
    for piece in slice_pieces(fid, chosen):
        for d in range(4):
            for f in piece.faces[d]:
                if f not in old_sets[d]:
                    new[d].add(f)
    return new


def slice_census(fid: str, chosen: Sequence[int | HyperplaneFamily]) -> dict:
    """Faces created by slicing the representative of ``fid``: counts by kind, new faces only."""
    families = admissible_families(fid)
    idx = []
    for h in chosen:
        if isinstance(h, HyperplaneFamily):
            if h not in families:
                if _equator_status(h, CROSS_FAMILIES[fid]) != "equator":
                    raise InadmissibleError(f"hyperplane family {h.normal} does not cut {fid} through an equator")
                raise InadmissibleError(f"hyperplane family {h.normal} also cuts other crosspolytopes")
            idx.append(families.index(h))
        else:
            idx.append(int(h))
    chosen_t = tuple(sorted(idx))
    _check_vertices(fid, chosen_t)
    new = _new_faces(fid, chosen_t)
    two = {f for piece in slice_pieces(fid, chosen_t) for f in piece.faces[2]}
    three: dict[str, int] = {}
    for f in sorted(new[3], key=sorted):
        kind = polyhedron_type(f, two)
        three[kind] = three.get(kind, 0) + 1
    gons: dict[int, int] = {}
    for f in new[2]:
        gons[len(f)] = gons.get(len(f), 0) + 1
    return {
        "family": fid,
        "cuts": len(chosen_t),
        "pieces": len(slice_pieces(fid, chosen_t)),
        "new_vertices": len(new[0]),
        "new_edges": len(new[1]),
        "new_2faces": dict(sorted(gons.items())),
        "new_3faces": dict(sorted(three.items())),
    }


def _check_vertices(fid: str, chosen: tuple[int, ...]) -> None:
    verts = set(CROSS_FAMILIES[fid].vertices)
    for piece in slice_pieces(fid, chosen):
        extra = [p for p in piece.vertices if p not in verts]
        if extra:
            raise InadmissibleError(
                f"{len(chosen)} cuts of {fid} create new vertex {fmt_point(extra[0])}; the vertex set must stay the lattice"
            )


@dataclass(frozen=True)
class SlicingConfig:
    cuts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] = ((), (), ())

    @classmethod
    def of(cls, mapping: Mapping[str, Iterable[int]] | None = None, **kw) -> "SlicingConfig":
        mapping = dict(mapping or {}, **kw)
        unknown = set(mapping) - set(FAMILIES)
        if unknown:
            raise InadmissibleError(f"unknown crosspolytope families {sorted(unknown)}")
        cuts = []
        for fid in FAMILIES:
            idx = [int(x) for x in mapping.get(fid, [])]
            n = len(admissible_families(fid))
            if len(set(idx)) != len(idx):
                raise InadmissibleError(f"{fid}: a hyperplane family is chosen twice (chosen families must be non-parallel)")
            if any(not 0 <= k < n for k in idx):
                raise InadmissibleError(f"{fid}: direction index out of range 0..{n - 1}")
            cuts.append(tuple(sorted(idx)))
        return cls(tuple(cuts))

    def __getitem__(self, fid: str) -> tuple[int, ...]:
        return self.cuts[FAMILIES.index(fid)]

    def counts(self) -> tuple[int, int, int]:
        return tuple(len(c) for c in self.cuts)

    def to_json(self) -> dict:
        return {fid: list(c) for fid, c in zip(FAMILIES, self.cuts)}

    def restricted_to(self, fids: Iterable[str]) -> "SlicingConfig":
        keep = set(fids)
        return SlicingConfig(tuple(c if fid in keep else () for fid, c in zip(FAMILIES, self.cuts)))

    def label(self) -> str:
        return " ".join(f"{fid}:{''.join(map(str, c)) or '-'}" for fid, c in zip(FAMILIES, self.cuts))


def all_configs() -> list[SlicingConfig]:
    """Every choice of at most three admissible directions per family."""
    per_family = []
    for fid in FAMILIES:
        n = len(admissible_families(fid))
        per_family.append([c for k in range(4) for c in itertools.combinations(range(n), k)])
    return [SlicingConfig(tuple(c)) for c in itertools.product(*per_family)]


@dataclass
class DeloneStar:
    tiles: list[tuple[str, Polytope]] = field(default_factory=list)  # (family, tile through the origin)
    faces: dict[int, set[frozenset[Point]]] = field(default_factory=lambda: {1: set(), 2: set(), 3: set()})
    face_sides: dict[frozenset[Point], frozenset[frozenset[Point]]] = field(default_factory=dict)  # 3-face -> its 2-faces at O

    @property
    def vertices(self) -> set[Point]:
        return {p for _, t in self.tiles for p in t.vertices}

    def edges(self) -> list[Point]:
        """Other endpoints of the edges at the origin."""
        return sorted(next(p for p in f if p != ORIGIN) for f in self.faces[1])


@dataclass(frozen=True)
class _FamilyStar:
    tiles: tuple[Polytope, ...]
    faces: dict
    face_sides: dict


def _as_ints(p: Point) -> tuple[int, ...]:
    return tuple(int(x) for x in p)


@lru_cache(maxsize=None)
def _family_star(fid: str, chosen: tuple[int, ...]) -> _FamilyStar:
    _check_vertices(fid, chosen)
    cross = CROSS_FAMILIES[fid]
    tiles = []
    faces: dict[int, set[frozenset[Point]]] = {1: set(), 2: set(), 3: set()}
    sides: dict[frozenset[Point], frozenset[frozenset[Point]]] = {}
    for v in cross.vertices:  # the tile ``R - v`` has the origin as its vertex ``v``
        shift = neg(v)
        for piece in slice_pieces(fid, chosen):
            if v not in piece.vertices:
                continue
            tiles.append(piece.translate(shift))
            # star faces use plain int coordinates: every vertex is a lattice point
            moved = {d: [frozenset(_as_ints(add(p, shift)) for p in f) for f in piece.faces[d] if v in f] for d in (1, 2, 3)}
            for d in (1, 2, 3):
                faces[d].update(moved[d])
            for q in moved[3]:
                sides[q] = frozenset(f for f in moved[2] if f <= q)
    return _FamilyStar(tuple(tiles), faces, sides)


def base_star() -> DeloneStar:
    return sliced_star(SlicingConfig())


def sliced_star(cfg: SlicingConfig) -> DeloneStar:
    star = DeloneStar()
    for fid in FAMILIES:
        part = _family_star(fid, cfg[fid])
        star.tiles.extend((fid, t) for t in part.tiles)
        for d in (1, 2, 3):
            star.faces[d] |= part.faces[d]
        for q, s in part.face_sides.items():
            if star.face_sides.setdefault(q, s) != s:
                raise AssertionError("two tiles disagree on the faces of a shared 3-face")
    return star


_WEIGHTS = (2, 3, 5, 7, 11, 13, 17, 19, 23)


def interior_direction(poly: Polytope) -> Point:
    """An interior point with unequal vertex weights; the plain centroid often sits on symmetry planes."""
    w = _WEIGHTS[: len(poly.vertices)]
    return tuple(sum(c * v[i] for c, v in zip(w, poly.vertices)) / sum(w) for i in range(4))


def probe_directions(count: int = 256, seed: int = 0) -> list[Point]:
    rng = random.Random(seed)
    return [pt(*(rng.randint(-97, 97) for _ in range(4))) for _ in range(count)]


def star_violations(star: DeloneStar, probes: Sequence[Point] | None = None) -> list[str]:
    """Exact consistency checks on a star; an empty list means it is sound."""
    problems = []
    base_vertices = base_star().vertices if star.tiles else set()
    for fid, t in star.tiles:
        if ORIGIN not in t.vertices:
            problems.append(f"{fid} tile without the origin as a vertex")
        for p in t.vertices:
            if not in_d4(p):
                problems.append(f"vertex {fmt_point(p)} is not a D4 point")
            elif p not in base_vertices:
                problems.append(f"vertex {fmt_point(p)} is new")
    for d in (1, 2, 3):
        tile_faces = {f for _, t in star.tiles for f in t.faces[d]}
        for f in star.faces[d]:
            if f not in tile_faces:
                problems.append(f"{d}-face {sorted(f)} is not a face of any tile")
    # every generic ray from the origin enters exactly one tile
    cones = [[_int_direction(n) for on, n, c in t.facets if ORIGIN in on] for _, t in star.tiles]
    if probes is None:
        # random directions, plus one direction into every tile so each cone is probed
        probes = probe_directions(256) + [interior_direction(t) for _, t in star.tiles]
    for d in probes:
        di = _int_direction(d)
        vals = [[sum(a * b for a, b in zip(n, di)) for n in cone] for cone in cones]
        if any(v == 0 for row in vals for v in row):
            continue
        hits = sum(all(v < 0 for v in row) for row in vals)
        if hits != 1:
            problems.append(f"ray {fmt_point(d)} lies in {hits} tiles")
    return problems


def _int_direction(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of a rational vector with coprime integer entries."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints) or 1
    return tuple(x // g for x in ints)


@lru_cache(maxsize=None)
def edge_class(a: Point) -> Point:
    """Representative of {a, -a}: the one whose first nonzero coordinate is positive."""
    lead = next(x for x in a if x != 0)
    return a if lead > 0 else neg(a)


@dataclass
class StarVenkov:
    graph: VenkovGraph
    half_belts: list[tuple[int, ...]]
    contractible: list[tuple[int, ...]]
    cycle_lengths: dict[int, int]
    all_triangles: bool


@lru_cache(maxsize=None)
def _triangle_key(a: Point, b: Point) -> frozenset[Point]:
    return frozenset((edge_class(a), edge_class(b), edge_class(sub(b, a))))


def venkov_from_star(star: DeloneStar) -> StarVenkov:
    """Primitive Venkov graph and gain cycles read off the Delone star of the origin.

    Venkov vertices are edges at the origin up to sign.  A Delone triangle
    ``{0, a, b}`` gives the belt triangle on ``[a], [b], [b - a]``.  A 3-face
    whose faces at the origin are all triangles gives a trivially
    contractible cycle through its edges at the origin.
    """
    vertices = sorted({edge_class(a) for a in star.edges()})
    tris = []
    for f in star.faces[2]:
        if len(f) == 3:
            a, b = sorted(p for p in f if p != ORIGIN)
            tris.append(_triangle_key(a, b))
    belts = sorted(set(tris), key=lambda k: sorted(k))
    vg = VenkovGraph.from_triangles(vertices, [sorted(k) for k in belts])
    belt_id = {k: i for i, k in enumerate(belts, start=1)}
    index = {v: i for i, v in enumerate(vertices)}

    contractible = []
    lengths: dict[int, int] = {}
    for q in sorted(star.faces[3], key=sorted):
        sides = star.face_sides[q]
        if any(len(s) != 3 for s in sides):
            continue
        adj: dict[Point, list[Point]] = {}
        for s in sides:
            a, b = sorted(p for p in s if p != ORIGIN)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if any(len(x) != 2 for x in adj.values()):
            raise AssertionError(f"vertex figure of 3-face {sorted(q)} at the origin is not a polygon")
        start = min(adj)
        steps = []
        prev, cur = None, start
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            steps.append((belt_id[_triangle_key(cur, nxt)], index[edge_class(cur)], index[edge_class(nxt)]))
            prev, cur = cur, nxt
            if cur == start:
                break
        if len(steps) != len(adj):
            raise AssertionError(f"vertex figure of 3-face {sorted(q)} is disconnected")
        contractible.append(vg.walk_vector(steps))
        lengths[len(steps)] = lengths.get(len(steps), 0) + 1
    return StarVenkov(
        graph=vg,
        half_belts=half_belt_cycles(vg),
        contractible=contractible,
        cycle_lengths=dict(sorted(lengths.items())),
        all_triangles=all(len(f) == 3 for f in star.faces[2]),
    )


def verify_nonzonotopal(cfg: SlicingConfig, detail: bool = True, star: DeloneStar | None = None) -> GainReport:
    """Gain-cycle generation test on the sliced star; ``detail`` adds the separate half-belt and contractible ranks."""
    sv = venkov_from_star(sliced_star(cfg) if star is None else star)
    vg = sv.graph
    dim = vg.cycle_dim()
    rows = list(dict.fromkeys(sv.contractible + sv.half_belts))  # drop repeats, keep order
    gain = stacked_rank(vg, rows, dim)
    extra = {
        "config": cfg.to_json(),
        "cut_counts": list(cfg.counts()),
        "cycle_lengths": {str(k): v for k, v in sv.cycle_lengths.items()},
        "all_2faces_triangular": sv.all_triangles,
    }
    if detail:
        extra["contractible_rank"] = stacked_rank(vg, sv.contractible, dim)
    return GainReport(
        cycle_dim=dim,
        gain_rank=gain,
        passed=gain == dim,
        vertices=len(vg.vertices),
        edges=len(vg.edges),
        half_belt_rank=stacked_rank(vg, sv.half_belts, dim) if detail else None,
        method="delone-star",
        extra=extra,
    )


def load_config(data: Mapping) -> SlicingConfig:
    if not isinstance(data, Mapping):
        raise InadmissibleError("config must be a JSON object with keys F1, F2, F3")
    return SlicingConfig.of(data)


def venkov_signature(star: DeloneStar) -> tuple[tuple, frozenset]:
    """Venkov vertices and belt triangles; equal signatures mean equal primitive Venkov graphs."""
    vertices = tuple(sorted({edge_class(a) for a in star.edges()}))
    belts = set()
    for f in star.faces[2]:
        if len(f) == 3:
            a, b = sorted(p for p in f if p != ORIGIN)
            belts.add(_triangle_key(a, b))
    return vertices, frozenset(belts)


def triangulated_part(cfg: SlicingConfig) -> SlicingConfig:
    """The coarser config keeping only the families cut three times."""
    return cfg.restricted_to(fid for fid in FAMILIES if len(cfg[fid]) == 3)


@lru_cache(maxsize=256)
def _signature_of(cfg: SlicingConfig):
    return venkov_signature(sliced_star(cfg))


def sweep_record(cfg: SlicingConfig) -> dict:
    """Everything the sweep asserts about one config."""
    star = sliced_star(cfg)
    report = verify_nonzonotopal(cfg, detail=False, star=star)
    coarse = triangulated_part(cfg)
    vertices, belts = venkov_signature(star)
    c_vertices, c_belts = _signature_of(coarse)
    return {
        "config": cfg.to_json(),
        "pass": report.passed,
        "cycle_dim": report.cycle_dim,
        "gain_rank": report.gain_rank,
        "venkov": {"V": report.vertices, "E": report.edges},
        "all_2faces_triangular": report.extra["all_2faces_triangular"],
        "zhitomirskii_expected": all(len(c) in (0, 1, 3) for c in cfg.cuts),
        "graph_equals_triangulated_part": vertices == c_vertices and belts == c_belts,
        "half_belts_contain_triangulated_part": c_belts <= belts,
        "cycle_lengths": report.extra["cycle_lengths"],
    }


def record_ok(rec: dict) -> bool:
    return (
        rec["pass"]
        and rec["all_2faces_triangular"] == rec["zhitomirskii_expected"]
        and rec["graph_equals_triangulated_part"]
        and rec["half_belts_contain_triangulated_part"]
    )


def _sweep_chunk(cuts: list) -> list[dict]:
    return [sweep_record(SlicingConfig(c)) for c in cuts]


def sweep(configs: Sequence[SlicingConfig] | None = None, jobs: int = 1) -> list[dict]:
    """Run `sweep_record` over ``configs`` (default: all of them), in config order."""
    configs = all_configs() if configs is None else list(configs)
    if jobs <= 1 or len(configs) < 2 * jobs:
        return [sweep_record(c) for c in configs]
    from concurrent.futures import ProcessPoolExecutor

    size = -(-len(configs) // (4 * jobs))
    chunks = [[c.cuts for c in configs[k : k + size]] for k in range(0, len(configs), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [rec for part in pool.map(_sweep_chunk, chunks) for rec in part]
