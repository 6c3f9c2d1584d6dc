"""GHZ and W: the two inequivalent kinds of genuine three-qubit entanglement.

Both states are fed through the canonical decomposition, classified, and
their maximal product overlap is computed twice: from the closed form of
their type and from the numerical maximizer.
"""

import math

from groverian import acin_decompose, classify, ghz_state, pmax_analytic, pmax_numeric_2site, w_state

for name, psi in (("GHZ", ghz_state()), ("W", w_state())):
    form = acin_decompose(psi).form
    exact = pmax_analytic(form)
    num = pmax_numeric_2site(psi)
    print(f"{name}: canonical lambdas {[round(x, 6) for x in form.lam]}, type {classify(form)}")
    print(f"  closed form {exact.formula_id}: P_max = {exact.value:.15f}")
    print(f"  numeric ({num.restarts} restarts, residual {num.multiplier_residual:.1e}): {num.value:.15f}")
    print(f"  G = sqrt(1 - P_max) = {math.sqrt(1 - exact.value):.15f}")

# W is further from every product state than GHZ is
print("\nG(W) > G(GHZ):", math.sqrt(5) / 3 > math.sqrt(0.5))
