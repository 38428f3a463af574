#!/usr/bin/env python3
"""Rotated bounding-box IoU: analytic sanity cases, matching estimates to
their closest ground truth, and a Monte-Carlo cross-check of the polygon
clipping path."""

import math

from attnspread import BevBox, box_corners, iou_bev, match_closest_gt, monte_carlo_iou

# --- analytic cases -----------------------------------------------------------
a = BevBox(cx=0, cy=0, length=1, width=1, yaw=0)
cases = [
    ("identical squares", a, 1.0),
    ("offset by half a side", BevBox(0.5, 0, 1, 1, 0), 1 / 3),
    ("rotated 45 degrees", BevBox(0, 0, 1, 1, math.pi / 4), 1 / math.sqrt(2)),
]
print("analytic cases:")
for label, b, expected in cases:
    print(f"  {label:24s} iou = {iou_bev(a, b):.7f}   expected {expected:.7f}")

print("\ncorners of a 4.6 x 1.9 car at 30 degrees:")
print(box_corners(BevBox(10, 5, 4.6, 1.9, math.radians(30))).round(3))

# --- Monte-Carlo cross-check ---------------------------------------------------
b1 = BevBox(0.3, -0.2, 3.1, 1.4, 0.9)
b2 = BevBox(-0.4, 0.5, 2.2, 2.0, -0.4)
exact = iou_bev(b1, b2)
estimate = monte_carlo_iou(b1, b2, samples=1_000_000, seed=0)
print(f"\nclipping says {exact:.5f}, a million random points say {estimate:.5f}")

# --- matching -------------------------------------------------------------------
estimates = [
    ("est-1", BevBox(0.2, 0.1, 4.6, 1.9, 0.05), "car"),
    ("est-2", BevBox(12.0, 3.0, 4.6, 1.9, 1.60), "car"),
    ("est-3", BevBox(40.0, 40.0, 4.6, 1.9, 0.0), "car"),
]
ground_truth = [
    ("gt-a", BevBox(0.0, 0.0, 4.6, 1.9, 0.0), "car"),
    ("gt-b", BevBox(12.3, 3.2, 4.6, 1.9, 1.57), "car"),
]
print("\nmax-IoU matching:")
for m in match_closest_gt(estimates, ground_truth):
    partner = m.ground_truth_id or "(unmatched)"
    print(f"  {m.estimate_id} -> {partner:12s} iou = {m.iou:.3f}")

print("\nnearest-center matching of the same scene:")
for m in match_closest_gt(estimates, ground_truth, mode="nearest-center"):
    partner = m.ground_truth_id or "(unmatched)"
    print(f"  {m.estimate_id} -> {partner:12s} iou = {m.iou:.3f}")
