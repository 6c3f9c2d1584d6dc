"""The phase of the |100> term does not change P_max for types 4a and 4b.

The phase only enters the invariants through J1, and there only multiplied
by l1 l2 l3 l4. When l4 = 0 (4a) or l2 or l3 = 0 (4b) that product vanishes,
so every invariant, and therefore P_max, is flat in the phase. A generic
profile with all five coefficients present is shown for contrast.
"""

import numpy as np

from groverian import AcinForm, from_acin, invariants_from_acin, pmax_numeric_2site

profiles = (("T4a", [0.5, 0.4, 0.3, 0.6, 0.0]),
            ("T4b", [0.5, 0.4, 0.0, 0.6, 0.45]),
            ("generic", [0.5, 0.4, 0.3, 0.6, 0.45]))
for label, lam in profiles:
    vals, j1 = [], []
    for phi in np.linspace(0, np.pi, 11):
        p = AcinForm.normalized(lam, phi)
        vals.append(pmax_numeric_2site(from_acin(p)).value)
        j1.append(invariants_from_acin(p).j1)
    print(f"{label:8s} P_max spread {max(vals) - min(vals):.1e}  "
          f"J1 in [{min(j1):.4f}, {max(j1):.4f}]")
