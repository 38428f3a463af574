#!/usr/bin/env python3
"""Render an SVG overlay for one frame: attention heatmap cells, estimated
boxes, dotted ground-truth boxes, attention means and covariance ellipses.

Reuses the scene from demo 03 (generates it if missing).
"""

from pathlib import Path

from attnspread import (
    AttentionMap,
    analyze_map,
    gen_scene_dataset,
    load_dataset,
    render_overlay_svg,
    select_top_k,
)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
scene = out / "scene"
if not (scene / "frames.jsonl").exists():
    print("generating scene ...")
    gen_scene_dataset(scene, seed=7)

meta, frames = load_dataset(scene / "frames.jsonl")
frame = next(f for f in frames if f.frame_id == "f010")
layer = meta.layer_count - 1

per_detection = []
for det in frame.detections:
    if det.score <= 0.8:
        continue
    amap = AttentionMap(grid=meta.grid, weights=det.attention[layer].astype(float))
    per_detection.append((det.detection_id, select_top_k(amap, 100),
                          analyze_map(amap, 100)))

svg = render_overlay_svg(frame, meta.grid, per_detection, n_sigma=2.0, value_scale=1.0)
path = out / f"overlay_{frame.frame_id}.svg"
path.write_text(svg)
print(f"{len(per_detection)} detections, {len(frame.ground_truth)} ground-truth boxes")
print(f"wrote {path} -- open it in a browser")
