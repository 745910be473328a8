"""Exponential growth of D_N^2 on CP^3_q and the summability probes."""

from cpq.spectra import growth_diagnostics

g = growth_diagnostics(3, 2, 0.5, 20)
print(f"fitted slope {g.slope:.5f}, expected 2 log(1/q) = {g.expected_slope:.5f}")
for m, v in enumerate(g.level_minima):
    print(f"  level {m:2d}: min D^2 = {v:.6g}")
for s, r in g.tail_ratios.items():
    print(f"  s = {s}: tail ratio {r:.4f}")
