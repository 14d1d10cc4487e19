"""Report assembly for the command line: analyses, sweeps and run manifests.

Every payload is plain JSON-able data.  Manifests are serialised with sorted
keys and carry no timestamps, so identical inputs give identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import d4
from .oracle import (
    GeneratorSet,
    graph_crosscheck,
    k33_generators,
    matroid_classes,
    oracle_belts,
    oracle_facets,
    zonotope_classes,
)
from .venkov import GainReport, build_venkov, check_gain_generation
from .zonograph import (
    ZonotopeGraph,
    block_graph,
    classify_3d,
    contract,
    enumerate_belts,
    enumerate_candidate_graphs,
    enumerate_facets,
    is_all_primitive,
    reducibility,
)


def jobs_from_env(default: int | None = None) -> int:
    """Worker count: the CPU count, capped by ``PARALLELO_JOBS`` when set."""
    jobs = default if default is not None else (os.cpu_count() or 1)
    raw = os.environ.get("PARALLELO_JOBS")
    if raw is not None and raw.strip():
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"PARALLELO_JOBS must be a positive integer, got {raw!r}") from None
        if cap < 1:
            raise ValueError(f"PARALLELO_JOBS must be a positive integer, got {raw!r}")
        jobs = min(jobs, cap)
    return max(1, jobs)


def parallel_map(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """Ordered map; a process pool is used only when it can help."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def digest(payload) -> str:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class RunManifest:
    command: str
    input_digest: str
    cases: list[dict]
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.cases) and all(c.get("pass") is True for c in self.cases)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "cases": self.cases,
            "summary": self.summary,
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- single graph ------------------------------------------------------------


def _parts(s: Iterable[frozenset[int]]) -> list[list[int]]:
    return [sorted(p) for p in s]


def analyze(g: ZonotopeGraph, method: str | None = None) -> dict:
    """Facets, belts, Venkov graph, projections and the generation verdict for one graph."""
    facets = enumerate_facets(g)
    findex = {f: k + 1 for k, f in enumerate(facets)}
    belts = enumerate_belts(g)
    report = check_gain_generation(g, method)
    out = {
        "graph": g.to_text(),
        "facets": [{"id": f"F{k}", "parts": _parts((f.first, f.second)), "label": f.label()} for f, k in findex.items()],
        "belts": [
            {
                "id": f"f{k}",
                "parts": _parts(b.parts),
                "primitive": b.primitive,
                "facets": [f"F{findex[f]}" for f in b.facets],
            }
            for k, b in enumerate(belts, start=1)
        ],
        "blocks": [block_graph(b).to_text() for b in reducibility(g)],
        "zhitomirskii": is_all_primitive(g),
    }
    out.update(report.to_json())
    return out


def analysis_dot(g: ZonotopeGraph) -> str:
    return build_venkov(g).to_dot()


_MD_HEADER = (
    "| # | Graph | Facets or special properties | Primitive Venkov graph |\n"
    "|---|---|---|---|\n"
)


def _facet_cell(g: ZonotopeGraph) -> str:
    return "; ".join(f"F{k}: {f.label()}" for k, f in enumerate(enumerate_facets(g), start=1))


def _venkov_cell(rep: GainReport) -> str:
    verdict = "generated" if rep.passed else "NOT generated"
    return f"V={rep.vertices}, E={rep.edges}, cycle dim {rep.cycle_dim}, gain rank {rep.gain_rank} ({verdict})"


def analysis_markdown(g: ZonotopeGraph, method: str | None = None) -> str:
    rep = check_gain_generation(g, method)
    lines = [_MD_HEADER + f"| 1 | {g.to_text()} | {describe(g)} | {_venkov_cell(rep)} |", "", "Belts:", ""]
    findex = {f: k for k, f in enumerate(enumerate_facets(g), start=1)}
    for k, b in enumerate(enumerate_belts(g), start=1):
        kind = "primitive" if b.primitive else "not primitive"
        lines.append(f"- f{k}: {b.label()}; {kind}, facets " + ", ".join(f"F{findex[f]}" for f in b.facets))
    return "\n".join(lines) + "\n"


def product_description(g: ZonotopeGraph) -> str | None:
    """Direct-product structure of the zonotope, or None if it is irreducible."""
    blocks = reducibility(g)
    if len(blocks) == 1:
        return None
    bridges = [b for b in blocks if len(b) == 1]
    if len(bridges) == len(blocks):
        return f"{g.n - 1}-dimensional cube"
    if not bridges:
        names = [_block_name(block_graph(b)) for b in blocks]
        if names == ["triangle"] * 2:
            return "direct product of two triangles in complementary planes (hexagon times hexagon)"
        return "direct product of " + " and ".join(sorted(names))
    # dropping one segment factor is contracting its bridge
    (e,) = bridges[0]
    rest = contract(g, e)
    if rest.n == 4:
        kind = classify_3d(rest).value
        return f"direct product of a segment and {'an' if kind[0] in 'aeiou' else 'a'} {kind}"
    return f"direct product of a segment and the zonotope of {rest.to_text()}"


def _block_name(b: ZonotopeGraph) -> str:
    if b.n == 3:
        return "triangle"
    if b.n == 4:
        return classify_3d(b).value
    return b.to_text()


def describe(g: ZonotopeGraph) -> str:
    product = product_description(g)
    if product:
        return product
    if is_all_primitive(g):
        kinds = {classify_3d(contract(g, e)).value for e in g.sorted_edges} if g.n == 5 else set()
        text = "all belts have six facets (Zhitomirskii case)"
        if len(kinds) == 1:
            text += f"; every projection along a zone vector is a {kinds.pop()}"
        return text
    return _facet_cell(g)


# -- zonotopal sweep ---------------------------------------------------------


def _sweep_case(g: ZonotopeGraph) -> dict:
    rep = check_gain_generation(g)
    return {
        "graph": g.to_text(),
        "edges": len(g.edges),
        "facets": len(enumerate_facets(g)),
        "belts": len(enumerate_belts(g)),
        "blocks": [block_graph(b).to_text() for b in reducibility(g)],
        "product": product_description(g),
        "zhitomirskii": is_all_primitive(g),
        "venkov": {"V": rep.vertices, "E": rep.edges},
        "cycle_dim": rep.cycle_dim,
        "gain_rank": rep.gain_rank,
        "method": rep.method,
        "pass": rep.passed,
    }


def k33_case() -> dict:
    gens = k33_generators()
    facets = oracle_facets(gens)
    belts = oracle_belts(gens, facets)
    sizes = sorted({b.belt_size for b in belts})
    zhit = sizes == [6]
    return {
        "graph": "K3,3 (cographic)",
        "rank": gens.rank,
        "facets": 2 * len(facets),
        "facet_pairs": len(facets),
        "belts": len(belts),
        "belt_sizes": sizes,
        "zhitomirskii": zhit,
        "note": "all belts size 6; Zhitomirskii" if zhit else "non-primitive belts present",
        "pass": zhit,
    }


def zonotopal_sweep(jobs: int = 1) -> RunManifest:
    graphs = enumerate_candidate_graphs(5)
    cases = parallel_map(_sweep_case, graphs, jobs)
    classes = zonotope_classes(graphs)
    m_classes = matroid_classes(graphs)
    for cid, members in enumerate(classes, start=1):
        for k in members:
            cases[k]["class"] = cid
    cases.append(k33_case())
    products = sorted({c["product"] for c in cases if c.get("product")})
    summary = {
        "graphs": len(graphs),
        "zonotope_classes": len(classes),
        "classes_agree_with_matroid_isomorphism": classes == m_classes,
        "class_members": classes,
        "reducible_classes": products,
        "zhitomirskii_classes": sorted({cases[m[0]]["graph"] for m in classes if cases[m[0]]["zhitomirskii"]}),
        "space_filling_zonotopes": len(classes) + 1,
    }
    return RunManifest("sweep", digest({"graphs": [g.to_text() for g in graphs], "extra": "K3,3"}), cases, summary)


def appendix_markdown(manifest: RunManifest | None = None) -> str:
    """One row per zonotope class, reducible classes first, then by facet count."""
    graphs = enumerate_candidate_graphs(5)
    manifest = manifest or zonotopal_sweep()
    reps = {}
    for case, g in zip(manifest.cases, graphs):
        reps.setdefault(case["class"], (case, g))
    rows = sorted(reps.values(), key=lambda cg: (cg[0]["product"] is None, cg[0]["facets"], cg[1].sorted_edges))
    lines = [
        "Vertex labels follow the canonical relabelling of each class and may differ from other tables up to graph isomorphism.",
        "",
        _MD_HEADER.rstrip("\n"),
    ]
    for k, (case, g) in enumerate(rows, start=1):
        venkov = f"V={case['venkov']['V']}, E={case['venkov']['E']}, cycle dim {case['cycle_dim']}, gain rank {case['gain_rank']}"
        lines.append(f"| {k} | {g.to_text()} | {describe(g)} | {venkov} |")
    k33 = manifest.cases[-1]
    lines.append(f"| {len(rows) + 1} | {k33['graph']} | {k33['facets']} facets; {k33['note']} | |")
    return "\n".join(lines) + "\n"


# -- oracle cross-check ------------------------------------------------------


def oracle_crosscheck(jobs: int = 1) -> RunManifest:
    graphs = enumerate_candidate_graphs(5)
    cases = parallel_map(graph_crosscheck, graphs, jobs)
    return RunManifest("oracle-crosscheck", digest([g.to_text() for g in graphs]), cases, {"graphs": len(graphs)})


def generator_report(gens: GeneratorSet) -> dict:
    facets = oracle_facets(gens)
    belts = oracle_belts(gens, facets)
    return {
        "generators": gens.to_json(),
        "rank": gens.rank,
        "facet_pairs": [{"members": sorted(f.members), "normal": list(f.normal)} for f in facets],
        "belts": [{"flat": sorted(b.flat), "size": b.belt_size, "facets": list(b.facets)} for b in belts],
    }


# -- D4 ----------------------------------------------------------------------

# Each open cell of the sliced crosspolytope interior counts (-1)^dim; the total must be 1.
def _euler_interior(census: dict) -> int:
    two = sum(census["new_2faces"].values())
    three = sum(census["new_3faces"].values())
    return census["new_vertices"] - census["new_edges"] + two - three + census["pieces"]


def census_cases() -> list[dict]:
    out = []
    for fid in d4.FAMILIES:
        for k in (1, 2, 3):
            c = d4.slice_census(fid, list(range(k)))
            c["euler_interior"] = _euler_interior(c)
            c["pass"] = c["euler_interior"] == 1
            out.append(c)
    return out


def d4_run(configs: Sequence[d4.SlicingConfig] | None, jobs: int = 1) -> RunManifest:
    """``configs=None`` sweeps every admissible config."""
    families = {
        fid: {"admissible": [h.to_json() for h in d4.admissible_families(fid)], "count": len(d4.admissible_families(fid))}
        for fid in d4.FAMILIES
    }
    census = census_cases()
    if configs is None:
        records = d4.sweep(jobs=jobs)
        label = {"all": True}
    else:
        records = [d4.sweep_record(c) for c in configs]
        label = {"configs": [c.to_json() for c in configs]}
    cases = []
    for rec in records:
        rec = dict(rec)
        rec["checks_ok"] = d4.record_ok(rec)
        rec["pass"] = rec["pass"] and rec["checks_ok"]
        cases.append(rec)
    summary = {
        "families": families,
        "slice_census": census,
        "census_ok": all(c["pass"] for c in census),
        "configs": len(cases),
        "passed": sum(c["pass"] for c in cases),
        "zhitomirskii": sum(c["all_2faces_triangular"] for c in cases),
    }
    manifest = RunManifest("d4", digest(label), cases, summary)
    if not summary["census_ok"]:
        manifest.cases.append({"census": "interior Euler characteristic mismatch", "pass": False})
    return manifest
