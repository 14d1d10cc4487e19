# The 24-cell case: slicing the crosspolytopes of the D4 Delone tiling.
import time

from parallelo import d4

for fid, f in d4.CROSS_FAMILIES.items():
    print(fid, "center", d4.fmt_point(f.center))
    for h in d4.admissible_families(fid):
        print("   ", h.normal, f"offsets {h.base} + {h.step}k")

for k in (1, 2, 3):
    c = d4.slice_census("F1", list(range(k)))
    print(k, "cuts:", c["pieces"], "pieces, new edges", c["new_edges"], c["new_2faces"], c["new_3faces"])

try:
    d4.slice_census("F1", [0, 1, 2, 3])
except d4.InadmissibleError as e:
    print("4 cuts:", e)

star = d4.base_star()
sv = d4.venkov_from_star(star)
print(len(star.tiles), "tiles at the origin,", len(sv.graph.vertices), "Venkov vertices,", sv.graph.cycle_dim(), "independent cycles")
print("3-faces at the origin, by cycle length:", sv.cycle_lengths)

# one family cut twice: a square 2-face appears and an octahedral 4-cycle is lost
cfg = d4.SlicingConfig.of(F1=[0, 1])
rep = d4.verify_nonzonotopal(cfg)
print(cfg.label(), rep.extra["cycle_lengths"], "rank", rep.gain_rank, "/", rep.cycle_dim, rep.passed)

t = time.time()
records = d4.sweep(d4.all_configs()[::25])
print(len(records), "configs,", sum(d4.record_ok(r) for r in records), "ok, in", round(time.time() - t, 1), "s")
