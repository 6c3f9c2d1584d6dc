"""Type classification of canonical states and closed-form maximal overlaps.

Every closed form for the types of the classification table is evaluated
twice: once in terms of the canonical coefficients (``lambda_value``) and
once in terms of the invariants J1..J5 (``value``). The two must agree
wherever both are defined. W-like states report the coefficient form as
``value`` and the invariant form as ``jform_value`` on the sign branch
where the latter is valid.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import NoCandidateMatches, OutOfRange
from .invariants import invariants_from_acin
from .states import from_wlike

ZERO_TOL = 1e-10
BRANCH_TOL = 1e-12
DENOM_TOL = 1e-12
ORACLE_TOL = 1e-6

TYPE_LABELS = (
    "T1", "T2a_J1", "T2a_J2", "T2a_J3", "T2b", "T3a", "T3b_12", "T3b_13", "T3b_23",
    "T4a", "T4b_2", "T4b_3", "T4c", "T5", "WLIKE", "GENERIC",
)
CLOSED_FORM_LABELS = TYPE_LABELS[:9]


@dataclass(frozen=True)
class AnalyticPmax:
    value: float
    formula_id: str
    label: str
    lambda_value: float = None
    jform_value: float = None
    candidates: list = field(default_factory=list)
    skipped: dict = field(default_factory=dict)

    def __post_init__(self):
        for k in ("value", "lambda_value", "jform_value"):
            v = getattr(self, k)
            if v is not None:
                object.__setattr__(self, k, float(v))
        object.__setattr__(self, "candidates", [(k, float(v)) for k, v in self.candidates])


@dataclass(frozen=True)
class Unavailable:
    label: str
    reason: str = "not presented"

    value = None


def classify(p, tol=ZERO_TOL):
    """Type label of a canonical form, decided by which coefficients vanish.

    Labels are checked from most to least specific; the first match wins.
    """
    l0, l1, l2, l3, l4 = p.lam
    z = [x < tol for x in p.lam]
    j1 = invariants_from_acin(p).j1
    if (z[0] and j1 < tol) or (z[2] and z[3] and z[4]):
        return "T1"
    if z[0]:
        return "T2a_J1"
    if z[3] and z[4]:
        return "T2a_J2"
    if z[2] and z[4]:
        return "T2a_J3"
    if z[1] and z[2] and z[3]:
        return "T2b"
    if z[1] and z[4]:
        return "T3a"
    if z[1] and z[2]:
        return "T3b_12"
    if z[1] and z[3]:
        return "T3b_13"
    if z[2] and z[3]:
        return "T3b_23"
    if z[4]:
        return "T4a"
    if z[2]:
        return "T4b_2"
    if z[3]:
        return "T4b_3"
    if z[1]:
        return "T4c"
    if p.phi < tol or np.pi - p.phi < tol:
        return "T5"
    return "GENERIC"


def _sqrt_pos(x):
    return np.sqrt(max(x, 0.0))


def pmax_two_qubit(J):
    """``1/2 [1 + sqrt(1 - 4 J)]`` for the two-qubit invariant ``J = det rho_A``."""
    if not -1e-12 <= J <= 0.25 + 1e-12:
        raise OutOfRange(f"two-qubit invariant {J!r} outside [0, 1/4]")
    return 0.5 * (1.0 + _sqrt_pos(1.0 - 4.0 * J))


def _top_schmidt_sq(m):
    return float(np.linalg.svd(np.asarray(m, dtype=np.complex128), compute_uv=False)[0] ** 2)


def tri_bell_sorted(l0, l2, l3):
    a, b, c = sorted((l0, l2, l3), reverse=True)
    return a, b, c


def tri_bell_large(J):
    """J-form valid when the largest of (l0, l2, l3) dominates: a^2 >= b^2 + c^2."""
    j1, j2, j3 = J.j1, J.j2, J.j3
    return 0.25 * (1 + _sqrt_pos(1 - 4 * (j1 + j2)) + _sqrt_pos(1 - 4 * (j1 + j3))
                   + _sqrt_pos(1 - 4 * (j2 + j3)))


def tri_bell_circumradius(J):
    """``4 sqrt(J1 J2 J3) / (4 (J1 + J2 + J3) - 1)``: four times the squared
    circumradius of the triangle with sides (l0, l2, l3)."""
    j1, j2, j3 = J.j1, J.j2, J.j3
    return 4 * _sqrt_pos(j1 * j2 * j3) / (4 * (j1 + j2 + j3) - 1)


def tri_bell_circumradius_lambda(l0, l2, l3):
    r1 = l3**2 + l2**2 - l0**2
    r2 = l0**2 + l2**2 - l3**2
    r3 = l0**2 + l3**2 - l2**2
    w = 2 * l0 * l3
    num = w * _sqrt_pos((w**2 + r1**2 - r3**2) * (w**2 + r2**2 - r3**2)) - r1 * r2 * r3
    return 0.25 * (1 + num / (w**2 - r3**2))


def tri_bell_region(l0, l2, l3, tol=BRANCH_TOL):
    """``">"``, ``"<"`` or ``"="`` comparing a^2 with b^2 + c^2."""
    a, b, c = tri_bell_sorted(l0, l2, l3)
    d = a * a - b * b - c * c
    if d > tol:
        return ">"
    if d < -tol:
        return "<"
    return "="


def pmax_analytic(p):
    """Closed-form maximal product overlap for the solvable types.

    Returns
    -------
    AnalyticPmax or Unavailable
        Types 4a/4b/4c/5 and generic states have no closed form and come
        back as :class:`Unavailable` carrying their label.
    """
    label = classify(p)
    J = invariants_from_acin(p)
    l0, l1, l2, l3, l4 = p.lam
    e = l1 * np.exp(1j * p.phi)

    if label == "T1":
        return AnalyticPmax(1.0, "product", label, 1.0)
    if label == "T2a_J1":
        return AnalyticPmax(pmax_two_qubit(J.j1), "biseparable_J1", label, _top_schmidt_sq([[e, l2], [l3, l4]]))
    if label == "T2a_J2":
        return AnalyticPmax(pmax_two_qubit(J.j2), "biseparable_J2", label, _top_schmidt_sq([[l0, 0], [e, l2]]))
    if label == "T2a_J3":
        return AnalyticPmax(pmax_two_qubit(J.j3), "biseparable_J3", label, _top_schmidt_sq([[l0, 0], [e, l3]]))
    if label == "T2b":
        return AnalyticPmax(pmax_two_qubit(J.j4), "generalized_ghz", label, max(l0**2, l4**2))
    if label == "T3a":
        big = ("tri_bell_large", tri_bell_large(J))
        small = ("tri_bell_circumradius", tri_bell_circumradius(J))
        region = tri_bell_region(l0, l2, l3)
        a = max(l0, l2, l3)
        if region == "<":
            return AnalyticPmax(small[1], small[0], label, tri_bell_circumradius_lambda(l0, l2, l3),
                                candidates=[small])
        cands = [big, small] if region == "=" else [big]
        return AnalyticPmax(big[1], big[0], label, a * a, candidates=cands)
    if label == "T3b_12":
        return AnalyticPmax(0.5 * (1 + _sqrt_pos(1 - 4 * (J.j3 + J.j4))), "extended_ghz_J3", label,
                            max(l0**2, 1 - l0**2))
    if label == "T3b_13":
        return AnalyticPmax(0.5 * (1 + _sqrt_pos(1 - 4 * (J.j2 + J.j4))), "extended_ghz_J2", label,
                            max(l0**2, 1 - l0**2))
    if label == "T3b_23":
        return AnalyticPmax(0.5 * (1 + _sqrt_pos(1 - 4 * (J.j1 + J.j4))), "extended_ghz_J1", label,
                            max(l4**2, 1 - l4**2))
    return Unavailable(label)


# ---------------------------------------------------------------- W-like family


def wlike_invariants(p):
    """(J1, J2, J3, J4) of ``a|100> + b|010> + c|001> + q|111>`` in closed form.

    ``J1 = (aq - bc)^2`` holds on the whole family; :func:`wlike_j1_absform`
    agrees with it only where :func:`wlike_branch` holds.
    """
    a, b, c, q = p.astuple()
    return (a * q - b * c) ** 2, (a * c - b * q) ** 2, (a * b - c * q) ** 2, 4 * a * b * c * q


def wlike_j1_absform(p):
    """J1 written through the canonical coefficients with phase 0, i.e.
    ``(l1 l4 - l2 l3)^2`` after substituting the standard-form map."""
    a, b, c, q = p.astuple()
    split = a * a + q * q - b * b - c * c
    num = 2 * a * b * c * q * abs(split) - (a * q + b * c) * abs((a * b - c * q) * (a * c - b * q))
    return num**2 / ((a * b + c * q) ** 2 * (a * c + b * q) ** 2)


def wlike_branch(p):
    """Sign predicate ``(a^2 + q^2 - b^2 - c^2)(ab - cq)(ac - bq) >= 0``."""
    a, b, c, q = p.astuple()
    return (a * a + q * q - b * b - c * c) * (a * b - c * q) * (a * c - b * q) >= 0


def wlike_candidates(p):
    """Quadrangle (Q), crossed-quadrangle (CQ) and largest-coefficient (L) values.

    Returns ``(candidates, skipped)``: a dict id -> value for the candidates
    that are defined and lie in (0, 1], and a dict id -> reason for the rest.
    """
    a, b, c, q = p.astuple()
    r3 = a * a + b * b - c * c - q * q
    w = a * b + q * c
    cands, skipped = {}, {}

    den = 4 * w * w - r3 * r3
    if abs(den) <= DENOM_TOL:
        skipped["Q"] = "vanishing denominator"
    else:
        cands["Q"] = 4 * (a * b + q * c) * (a * c + q * b) * (a * q + b * c) / den

    sx2 = (a + b + c + q) * (a + b - c - q) * (a - b + c - q) * (-a + b + c - q) / 16
    num = (a * b - c * q) * (a * c - b * q) * (b * c - a * q)
    if sx2 <= DENOM_TOL:
        skipped["CQ"] = "nonpositive squared area"
    elif num <= 0:
        skipped["CQ"] = "nonpositive numerator"
    else:
        cands["CQ"] = num / (4 * sx2)

    cands["L"] = max(a * a, b * b, c * c, q * q)
    for k in list(cands):
        if not 0 < cands[k] <= 1 + 1e-12:
            skipped[k] = f"value {cands[k]!r} outside (0, 1]"
            del cands[k]
    return cands, skipped


def wlike_jforms(J):
    """Invariant forms of the Q, CQ and L candidates; valid on the branch
    where :func:`wlike_branch` holds. ``J`` is a (J1, J2, J3, J4) tuple."""
    j1, j2, j3, j4 = J[:4]
    out = {}
    den_q = 4 * (j1 + j2 + j3 + 2 * j4) - 1
    if abs(den_q) > DENOM_TOL:
        out["Q"] = 4 * _sqrt_pos((j1 + j4) * (j2 + j4) * (j3 + j4)) / den_q
    den_cq = 4 * (j1 + j2 + j3 + j4) - 1
    if abs(den_cq) > DENOM_TOL:
        out["CQ"] = 4 * _sqrt_pos(j1 * j2 * j3) / den_cq
    out["L"] = 0.25 * (1 + _sqrt_pos(1 - 4 * (j2 + j3 + j4)) + _sqrt_pos(1 - 4 * (j1 + j3 + j4))
                       + _sqrt_pos(1 - 4 * (j1 + j2 + j4)))
    return out


def pmax_wlike(p, oracle=None, tol=ORACLE_TOL):
    """Maximal product overlap of a W-like state.

    All three closed-form candidates are computed; the one agreeing with
    the numerical ``oracle`` value within ``tol`` is reported. When
    ``oracle`` is None it is computed with the default two-site maximizer.

    Raises
    ------
    NoCandidateMatches
        If no candidate is within ``tol`` of the oracle.
    """
    if oracle is None:
        from .numeric import pmax_numeric_2site

        oracle = pmax_numeric_2site(from_wlike(p)).value
    cands, skipped = wlike_candidates(p)
    matches = sorted((abs(v - oracle), k) for k, v in cands.items() if abs(v - oracle) < tol)
    if not matches:
        raise NoCandidateMatches(
            f"no candidate matches oracle {oracle!r}: {cands}, skipped {skipped}")
    best = matches[0][1]
    value = cands[best]
    jval = None
    if wlike_branch(p):
        jval = wlike_jforms(wlike_invariants(p)).get(best)
    return AnalyticPmax(value, best, "WLIKE", lambda_value=value, jform_value=jval,
                        candidates=sorted(cands.items()), skipped=skipped)


