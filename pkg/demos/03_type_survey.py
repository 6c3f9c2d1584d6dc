"""Which states have a closed form, and how well does it hold up?

For each type with a known formula we draw a few random canonical states and
compare the formula with the numerical maximum. Types 4 and 5 have no closed
form; for them only the numerical value is available.
"""

import numpy as np

from groverian import pmax_analytic, pmax_numeric_2site
from groverian.analytic import Unavailable
from groverian.canonical import AcinForm
from groverian.states import from_acin
from groverian.suites import FAMILY_SAMPLERS

rng = np.random.default_rng(7)
print(f"{'family':8s} {'formula':10s} {'worst |analytic - numeric|':>28s}")
for fam, sample in FAMILY_SAMPLERS.items():
    worst, fid = 0.0, None
    for _ in range(50):
        p = sample(rng)
        res = pmax_analytic(p)
        fid = res.formula_id
        worst = max(worst, abs(res.value - pmax_numeric_2site(from_acin(p)).value))
    print(f"{fam:8s} {fid:10s} {worst:28.2e}")

generic = AcinForm.normalized([0.5, 0.4, 0.3, 0.6, 0.35], 0.9)
res = pmax_analytic(generic)
assert isinstance(res, Unavailable)
print(f"\n{res.label}: closed form {res.reason}; numeric P_max = "
      f"{pmax_numeric_2site(from_acin(generic)).value:.12f}")
