"""The five polynomial local-unitary invariants J1..J5 of three-qubit pure states.

Two routes are provided: closed-form evaluation on canonical coefficients
(:func:`invariants_from_acin`) and a basis-free route from Bloch-vector
norms plus the hyperdeterminant (:func:`invariants_from_state`). Agreement
between the two is the main consistency check of the canonical decomposition.
"""

from dataclasses import dataclass

import numpy as np

from .bloch import bloch3
from .errors import UnknownFamily
from .states import as_state2, as_state3

RELATION_TOL = 1e-8


@dataclass(frozen=True)
class Invariants:
    j1: float
    j2: float
    j3: float
    j4: float
    j5: float

    def astuple(self):
        return (self.j1, self.j2, self.j3, self.j4, self.j5)

    def asarray(self):
        return np.array(self.astuple())


def _clamp(x):
    # rounding can push a vanishing invariant slightly negative
    return 0.0 if -1e-12 < x < 0 else float(x)


def invariants_from_acin(p):
    """Evaluate J1..J5 on canonical coefficients ``p`` (an AcinForm)."""
    l0, l1, l2, l3, l4 = p.lam
    j1 = l1**2 * l4**2 + l2**2 * l3**2 - 2 * l1 * l2 * l3 * l4 * np.cos(p.phi)
    j2 = l0**2 * l2**2
    j3 = l0**2 * l3**2
    j4 = l0**2 * l4**2
    j5 = l0**2 * (j1 + l2**2 * l3**2 - l1**2 * l4**2)
    return Invariants(*(_clamp(x) for x in (j1, j2, j3, j4, j5)))


def hyperdeterminant(state):
    """Cayley hyperdeterminant of the 2x2x2 amplitude tensor."""
    a = np.asarray(state, dtype=np.complex128).reshape(2, 2, 2)
    d1 = (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
          + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2)
    d2 = (a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
          + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1])
    d3 = (a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
          + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0])
    return d1 - 2 * d2 + 4 * d3


def invariants_from_state(state):
    """J1..J5 of an arbitrary state without canonicalizing it.

    J4 is the modulus of the hyperdeterminant. With ``T = J1+J2+J3+J4`` the
    single-qubit Bloch norms give ``|v_i|^2 = 1 - 4 (T - J_i)``, which fixes
    J1..J3 once J4 is known; J5 then follows from the contraction
    ``h3_ab v1_a v2_b = 1 - 4 (T - J5)``.
    """
    psi = as_state3(state)
    bf = bloch3(state=psi)
    j4 = float(abs(hyperdeterminant(psi)))
    m = np.array([(1.0 - v @ v) / 4.0 for v in (bf.v1, bf.v2, bf.v3)])
    # m_i = T - J_i, so sum(m) = 3T - (T - J4) = 2T + J4
    total = (m.sum() - j4) / 2.0
    j1, j2, j3 = total - m
    j5 = (bf.v1 @ bf.h3 @ bf.v2 - 1.0) / 4.0 + total
    return Invariants(*(_clamp(x) for x in (j1, j2, j3, j4, j5)))


def bloch_identity_residuals(state, J=None):
    """Residuals of the eight Bloch-norm identities in terms of J1..J5.

    Returns a dict mapping identity name to ``lhs - rhs``.
    """
    psi = as_state3(state)
    bf = bloch3(state=psi)
    if J is None:
        J = invariants_from_state(psi)
    j1, j2, j3, j4, j5 = J.astuple()
    return {
        "|v1|^2": bf.v1 @ bf.v1 - (1 - 4 * (j2 + j3 + j4)),
        "|v2|^2": bf.v2 @ bf.v2 - (1 - 4 * (j1 + j3 + j4)),
        "|v3|^2": bf.v3 @ bf.v3 - (1 - 4 * (j1 + j2 + j4)),
        "tr h1 h1^T": np.sum(bf.h1**2) - (1 + 4 * (2 * j1 - j2 - j3)),
        "tr h2 h2^T": np.sum(bf.h2**2) - (1 - 4 * (j1 - 2 * j2 + j3)),
        "tr h3 h3^T": np.sum(bf.h3**2) - (1 - 4 * (j1 + j2 - 2 * j3)),
        "g.g": np.sum(bf.g**2) - (1 + 4 * (2 * j1 + 2 * j2 + 2 * j3 + 3 * j4)),
        "h3 v1 v2": bf.v1 @ bf.h3 @ bf.v2 - (1 - 4 * (j1 + j2 + j3 + j4 - j5)),
    }


def two_qubit_invariant(state):
    """``J = l0^2 l1^2`` of a two-qubit state, i.e. ``det rho_A``."""
    m = as_state2(state).reshape(2, 2)
    return float(abs(np.linalg.det(m)) ** 2)


# Families and the relations among invariants that hold on each of them.
RELATION_FAMILIES = ("T1", "T2a", "T2b", "T3a", "T3b", "T4a", "T4b", "T4c", "T5", "WLIKE", "GENERIC")


def _relations(J, family):
    j1, j2, j3, j4, j5 = J.astuple()
    root = np.sqrt(max(j1 * j2 * j3, 0.0))
    if family == "T3a":
        return {
            "J1J2+J1J3+J2J3 = sqrt(J1J2J3)": j1 * j2 + j1 * j3 + j2 * j3 - root,
            "sqrt(J1J2J3) = J5/2": root - j5 / 2,
        }
    if family in ("T4a", "T5"):
        return {"sqrt(J1J2J3) = J5/2": root - j5 / 2}
    if family == "T4c":
        return {
            "J1(J2+J3+J4)+J2J3 = sqrt(J1J2J3)": j1 * (j2 + j3 + j4) + j2 * j3 - root,
            "sqrt(J1J2J3) = J5/2": root - j5 / 2,
        }
    if family == "WLIKE":
        return {"J5 = 2 sqrt(J1J2J3)": j5 - 2 * root}
    if family in ("T1", "T2a", "T2b", "T3b", "T4b"):
        # J5 vanishes identically on these families, as does J1 J2 J3
        return {"J5 = 0": j5, "J1J2J3 = 0": j1 * j2 * j3}
    return {}


def check_relations(J, family, tol=RELATION_TOL):
    """Evaluate the algebraic relations among J1..J5 that hold on ``family``.

    ``family`` is a type label; sub-labels such as ``T3b_12`` or ``T2a_J1``
    are reduced to their family. Returns ``{"residuals": {...}, "passed": bool}``.
    """
    base = family.split("_")[0]
    if base not in RELATION_FAMILIES:
        raise UnknownFamily(f"no relations known for family {family!r}")
    res = {k: float(v) for k, v in _relations(J, base).items()}
    return {"residuals": res, "passed": all(abs(v) < tol for v in res.values())}
