#!/usr/bin/env python3
"""Walkthrough of the core statistics: build attention maps over a BEV grid,
select the top-K weights, and compute weighted mean, covariance, and spread
(the covariance determinant). Also shows the invariances these statistics obey.
"""

import numpy as np

from attnspread import (
    AttentionMap,
    GaussianSpec,
    GridSpec,
    analyze_map,
    attention_covariance,
    attention_mean,
    covariance_ellipse,
    default_grid,
    gen_gaussian_map,
    select_top_k,
)

grid = default_grid()
print(f"grid: {grid.size_cells}x{grid.size_cells} cells of {grid.cell_size} m "
      f"covering +-{grid.extent / 2} m")

# --- a hand-built map: two cells sharing the weight -------------------------
w = np.zeros((grid.size_cells, grid.size_cells))
w[64, 64] = 1.0   # cell center (0.4, 0.4)
w[64, 69] = 1.0   # 4 m to the right
amap = AttentionMap(grid=grid, weights=w)
sel = select_top_k(amap, k=2)
mean = attention_mean(sel, grid)
cov = attention_covariance(sel, grid, mean)
print("\ntwo-cell map:")
print("  selected:", sel.entries)
print("  mean:", mean, "(midpoint)")
print("  covariance:\n", cov, "\n  -> variance (d/2)^2 = 4.0 along x")

# --- a Gaussian-shaped map: spread recovers det(covariance) -----------------
target = np.array([[2.56, 0.4], [0.4, 1.0]])
amap = gen_gaussian_map(grid, GaussianSpec(mean=(10.0, -5.0), covariance=target))
stats = analyze_map(amap, k=grid.n_cells)
print("\nGaussian map with covariance\n", target)
print("  recovered mean:      ", stats.mean)
print("  recovered covariance:\n", stats.covariance)
print(f"  spread = det C = {stats.spread:.4f}  (target det = {np.linalg.det(target):.4f})")

# top-K truncation: selecting only the strongest cells narrows the estimate
for k in (10_000, 1000, 100):
    print(f"  spread with k={k:6d}: {analyze_map(amap, k).spread:.4f}")

# --- the ellipse used for overlays -------------------------------------------
ell = covariance_ellipse(stats.covariance, n_sigma=2.0, center=tuple(stats.mean))
print(f"\n2-sigma ellipse: semi-axes ({ell.semi_major:.2f}, {ell.semi_minor:.2f}) m, "
      f"rotation {np.degrees(ell.rotation):.1f} deg")

# --- invariances --------------------------------------------------------------
rng = np.random.default_rng(0)
w = rng.uniform(0, 1, (grid.size_cells, grid.size_cells))
base = analyze_map(AttentionMap(grid=grid, weights=w), k=100)
scaled = analyze_map(AttentionMap(grid=grid, weights=w * 1e3), k=100)
print("\nweight scaling (x1000) changes spread by a relative",
      abs(scaled.spread - base.spread) / base.spread, "(normalization cancels)")

moved_grid = GridSpec(grid.size_cells, grid.min_x + 30.0, grid.min_y, grid.cell_size)
moved = analyze_map(AttentionMap(grid=moved_grid, weights=w), k=100)
print("shifting the grid 30 m moves the mean by", moved.mean - base.mean,
      "and leaves spread at", moved.spread - base.spread, "difference")
