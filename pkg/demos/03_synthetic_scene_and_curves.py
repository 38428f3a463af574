#!/usr/bin/env python3
"""End-to-end: generate a synthetic scene whose spread-vs-IoU relation is
strictly decreasing and spread-vs-range strictly increasing, run the four
aggregation pipelines, and write their CSVs (plus PNG plots if matplotlib is
available).

The synthetic dataset ships with a bookkeeping sidecar recording every
detection's intended IoU and spread, so the curves below have a known shape.
"""

from pathlib import Path

from attnspread import (
    analyze_dataset,
    filter_analyses,
    gen_scene_dataset,
    iou_curve,
    layer_curve,
    load_dataset,
    spatial_map,
    to_records,
    track_age_curves,
    write_series_csv,
    write_spatial_csv,
)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

scene = out / "scene"
if not (scene / "frames.jsonl").exists():
    print("generating scene ...")
    gen_scene_dataset(scene, seed=7)

meta, frames = load_dataset(scene / "frames.jsonl")
print(f"dataset: L={meta.layer_count} layers, grid {meta.grid.size_cells}^2, "
      f"frame period {meta.frame_period_s}s")

analyses = analyze_dataset(meta, frames, k=100)
records = to_records(filter_analyses(analyses, score_threshold=0.8, class_filter="car"))
print(f"{len(records)} detections after score/class filtering")

# spread vs IoU (last decoder layer)
iou_series = iou_curve(records, bin_width=0.1)
write_series_csv(iou_series, out / "iou_curve.csv")
print("\nspread vs IoU (medians):")
for center, med, count in zip(iou_series.bin_centers, iou_series.median, iou_series.count):
    bar = "#" * int((med or 0) * 8)
    print(f"  iou {center:.2f} (n={count:3d}): {med:8.3f} {bar}")

# spread over the BEV plane
grid_stats = spatial_map(records, bins_per_side=20, extent=51.2)
write_spatial_csv(grid_stats, out / "spatial_map.csv")
populated = grid_stats.count > 0
print(f"\nspatial map: {populated.sum()} of 400 bins populated; "
      f"mean spread range [{grid_stats.mean_spread[populated].min():.2f}, "
      f"{grid_stats.mean_spread[populated].max():.2f}]")

# spread per decoder layer
layers = layer_curve(records)
write_series_csv(layers, out / "layer_curve.csv")
print("\nspread per decoder layer (medians):",
      [round(m, 2) for m in layers.median])

# spread over track lifetime
init_series, final_series = track_age_curves(records, frame_period_s=0.5,
                                             window_s=3.5, min_track_s=7.0)
write_series_csv(init_series, out / "track_age_init.csv")
write_series_csv(final_series, out / "track_age_final.csv")
print("\ntrack initialization medians:", [round(m, 2) for m in init_series.median])
print("track finalization medians:  ", [round(m, 2) for m in final_series.median])
print(f"\nCSVs written to {out}/")

# optional plots
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping plots")
else:
    fig, axes = plt.subplots(1, 3, figsize=(14, 4))
    axes[0].errorbar(iou_series.bin_centers, iou_series.median,
                     yerr=[[m - lo for m, lo in zip(iou_series.median, iou_series.p25)],
                           [hi - m for m, hi in zip(iou_series.median, iou_series.p75)]],
                     fmt="o-", capsize=3)
    axes[0].set(xlabel="IoU", ylabel="spread [m^4]", yscale="log", title="spread vs IoU")
    im = axes[1].imshow(grid_stats.mean_spread.T, origin="lower",
                        extent=[-51.2, 51.2, -51.2, 51.2])
    fig.colorbar(im, ax=axes[1], label="mean spread")
    axes[1].set(xlabel="x [m]", ylabel="y [m]", title="spread over the BEV plane")
    axes[2].errorbar(layers.bin_centers, layers.median,
                     yerr=[[m - lo for m, lo in zip(layers.median, layers.p25)],
                           [hi - m for m, hi in zip(layers.median, layers.p75)]],
                     fmt="s-", capsize=3)
    axes[2].set(xlabel="decoder layer", ylabel="spread [m^4]", yscale="log",
                title="spread per layer")
    fig.tight_layout()
    fig.savefig(out / "curves.png", dpi=120)
    print(f"plots saved to {out / 'curves.png'}")
