"""The five local-unitary invariants, computed two independent ways.

A random state is scrambled by random single-qubit unitaries. The invariants
are then read off its Bloch data directly and, separately, from its
canonical five-term form. Both must agree with each other and with the
values before scrambling.
"""

import numpy as np

from groverian import acin_decompose, invariants_from_acin, invariants_from_state
from groverian.states import apply_local, haar_unitary, random_state

psi = random_state(2024, "haar3")
scrambled = apply_local(psi, haar_unitary(1), haar_unitary(2), haar_unitary(3))

direct = invariants_from_state(psi).asarray()
after = invariants_from_state(scrambled).asarray()
dec = acin_decompose(scrambled)
canon = invariants_from_acin(dec.form).asarray()

np.set_printoptions(precision=12, suppress=True)
print("J1..J5 from Bloch data:        ", direct)
print("after local unitaries:         ", after)
print("from the canonical form:       ", canon)
print("canonical lambdas:", np.round(dec.form.lam, 6), "phi =", round(dec.form.phi, 6))
print("largest disagreement:", np.max(np.abs(np.vstack([after, canon]) - direct)))
