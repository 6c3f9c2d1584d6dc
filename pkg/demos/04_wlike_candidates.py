"""W-like states a|100> + b|010> + c|001> + q|111> and their three candidate formulas.

Which formula applies depends on a region of (a, b, c, q) that is not spelled
out, so all three candidates are computed and the numeric maximum decides.
Walking q across a domain boundary shows the switch: the quadrangle value Q
and the largest-coefficient value L touch tangentially, and the true
maximum follows Q on one side and L on the other.
"""

from groverian import WLikeParams, from_wlike, pmax_numeric_2site
from groverian.analytic import wlike_candidates

a, b, c = 0.2393, 0.5093, 0.3548
print(f"{'q':>8s} {'Q':>12s} {'L':>12s} {'numeric':>12s}  match")
for q in (0.735, 0.740, 0.745, 0.7467, 0.750, 0.755, 0.760):
    p = WLikeParams.normalized(a, b, c, q)
    cands, skipped = wlike_candidates(p)
    num = pmax_numeric_2site(from_wlike(p)).value
    hits = [k for k, v in cands.items() if abs(v - num) < 1e-6]
    print(f"{q:8.4f} {cands.get('Q', float('nan')):12.8f} {cands['L']:12.8f} {num:12.8f}  {','.join(hits)}")
