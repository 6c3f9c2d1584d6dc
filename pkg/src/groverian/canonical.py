"""Canonical forms: two-qubit Schmidt form, the five-term three-qubit
canonical form and the map from W-like states onto it.

The three-qubit canonical form is

    l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>

with all ``l_i >= 0``, ``sum l_i^2 = 1`` and ``0 <= phi <= pi``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DecompositionFailure, DegenerateTransform, InvalidForm, NoRealRoot
from .states import as_state2, as_state3, from_acin, from_wlike  # noqa: F401

NORM_TOL = 1e-10
ZERO_LAMBDA = 1e-10
# discarded amplitudes after the slice rotation must be this small
RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class AcinForm:
    lam: tuple
    phi: float = 0.0

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lam)
        if len(lam) != 5:
            raise InvalidForm("canonical form needs five coefficients")
        if min(lam) < 0:
            raise InvalidForm(f"coefficients must be nonnegative, got {lam}")
        if abs(sum(x * x for x in lam) - 1.0) > NORM_TOL:
            raise InvalidForm("squared coefficients must sum to 1")
        if not -1e-12 <= self.phi <= np.pi + 1e-12:
            raise InvalidForm(f"phase {self.phi!r} outside [0, pi]")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "phi", float(min(max(self.phi, 0.0), np.pi)))

    @classmethod
    def normalized(cls, lam, phi=0.0):
        lam = np.abs(np.asarray(lam, dtype=float))
        return cls(tuple(lam / np.linalg.norm(lam)), phi)


@dataclass(frozen=True)
class WLikeParams:
    """Coefficients of ``a|100> + b|010> + c|001> + q|111>``."""

    a: float
    b: float
    c: float
    q: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.q)
        if min(vals) < 0:
            raise InvalidForm(f"W-like coefficients must be nonnegative, got {vals}")
        if abs(sum(x * x for x in vals) - 1.0) > NORM_TOL:
            raise InvalidForm("W-like coefficients must be normalized")

    @classmethod
    def normalized(cls, a, b, c, q):
        v = np.abs(np.array([a, b, c, q], dtype=float))
        v = v / np.linalg.norm(v)
        return cls(*map(float, v))

    def astuple(self):
        return (self.a, self.b, self.c, self.q)


@dataclass(frozen=True)
class SchmidtForm2:
    lambda0: float
    lambda1: float
    uA: np.ndarray = field(repr=False)
    uB: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class AcinDecomposition:
    """Canonical form together with the local unitaries that realize it.

    ``apply_local(psi, uA, uB, uC)`` equals ``from_acin(form)`` up to a global
    phase, after complex conjugation when ``conjugated`` is set (the phase was
    folded from (pi, 2 pi) into [0, pi]).
    """

    form: AcinForm
    uA: np.ndarray = field(repr=False)
    uB: np.ndarray = field(repr=False)
    uC: np.ndarray = field(repr=False)
    conjugated: bool = False


def random_acin(rng):
    lam = np.abs(rng.standard_normal(5))
    return AcinForm(tuple(lam / np.linalg.norm(lam)), float(rng.uniform(0.0, np.pi)))


def random_wlike(rng):
    v = np.abs(rng.standard_normal(4))
    v = v / np.linalg.norm(v)
    return WLikeParams(*map(float, v))


def schmidt2(state):
    """Schmidt coefficients of a two-qubit state, largest first.

    The returned unitaries satisfy ``(uA (x) uB) psi = l0|00> + l1|11>``.
    """
    psi = as_state2(state)
    u, s, vh = np.linalg.svd(psi.reshape(2, 2))
    return SchmidtForm2(float(s[0]), float(s[1]), u.conj().T, vh.conj())


def _unit_pair(s, t):
    n = np.hypot(abs(s), abs(t))
    return s / n, t / n


def _singular_combinations(t0, t1):
    """Projective roots ``(s, t)`` of ``det(s T0 + t T1) = 0``."""
    a = np.linalg.det(t0)
    c = np.linalg.det(t1)
    b = t0[0, 0] * t1[1, 1] + t1[0, 0] * t0[1, 1] - t0[0, 1] * t1[1, 0] - t1[0, 1] * t0[1, 0]
    eps = 1e-14
    if max(abs(a), abs(b), abs(c)) < eps:
        return None
    if abs(c) >= abs(a) and abs(c) >= eps:
        # a + b x + c x^2 = 0 with (s, t) = (1, x)
        return [_unit_pair(1.0, x) for x in np.roots([c, b, a])]
    if abs(a) >= eps:
        # a y^2 + b y + c = 0 with (s, t) = (y, 1)
        return [_unit_pair(y, 1.0) for y in np.roots([a, b, c])]
    # only the mixed term survives: s t = 0
    return [(1.0, 0.0), (0.0, 1.0)]


def _dominant_combination(t0, t1):
    # every combination is singular: take the one with the largest norm.
    # |s T0 + t T1|^2 = w^H G w for w = (s, t), so w is the top eigenvector of G
    gram = np.array([[np.vdot(x, y) for y in (t0, t1)] for x in (t0, t1)])
    w, v = np.linalg.eigh(gram)
    s, t = v[:, -1]
    return _unit_pair(s, t)


def _canonicalize(psi, s, t):
    """Build the canonical form reached by making ``s T0 + t T1`` the top slice."""
    tensor = psi.reshape(2, 2, 2)
    uA = np.array([[s, t], [-np.conj(t), np.conj(s)]], dtype=np.complex128)
    top = s * tensor[0] + t * tensor[1]
    u, _, vh = np.linalg.svd(top)
    uB = u.conj().T
    uC = vh.conj()
    x = np.einsum("ai,bj,ck,ijk->abc", uA, uB, uC, tensor)
    resid = max(abs(x[0, 0, 1]), abs(x[0, 1, 0]), abs(x[0, 1, 1]))
    if resid > RESIDUAL_TOL:
        raise DecompositionFailure(f"top slice not rank one (residual {resid:.3g})")

    a0, a1, a2, a3, a4 = x[0, 0, 0], x[1, 0, 0], x[1, 0, 1], x[1, 1, 0], x[1, 1, 1]
    lam = np.abs([a0, a1, a2, a3, a4])
    lam[lam < ZERO_LAMBDA] = 0.0
    lam /= np.linalg.norm(lam)
    nz = lam > 0
    th = np.angle([a0, a1, a2, a3, a4])

    # Diagonal phase gates diag(e^{i a0}, e^{i a1}) on A, diag(1, e^{i b1}) on B
    # and diag(1, e^{i c1}) on C make |000>, |101>, |110>, |111> real positive.
    alpha0 = -th[0]
    if nz[2] and nz[3] and nz[4]:
        alpha1 = th[4] - th[2] - th[3]
        gamma1 = -th[2] - alpha1
        beta1 = -th[3] - alpha1
    else:
        # a spare phase exists: spend it on |100> so that phi = 0
        alpha1 = -th[1] if nz[1] else 0.0
        beta1 = -th[3] - alpha1 if nz[3] else 0.0
        gamma1 = -th[2] - alpha1 if nz[2] else 0.0
        if nz[4]:
            if nz[2]:
                beta1 = -th[4] - alpha1 - gamma1
            else:
                gamma1 = -th[4] - alpha1 - beta1
    phi = float(np.angle(np.exp(1j * (th[1] + alpha1)))) if nz[1] else 0.0
    uA = np.diag(np.exp(1j * np.array([alpha0, alpha1]))) @ uA
    uB = np.diag([1.0, np.exp(1j * beta1)]) @ uB
    uC = np.diag([1.0, np.exp(1j * gamma1)]) @ uC
    conjugated = phi < 0
    return AcinDecomposition(AcinForm(tuple(lam), abs(phi)), uA, uB, uC, conjugated)


def acin_candidates(state):
    """Canonical forms reachable from ``state``, one per root of the slice quadratic.

    Both roots of ``det(s T0 + t T1) = 0`` give a valid canonical form; they
    share the same polynomial invariants but can differ in ``l0``.
    """
    psi = as_state3(state)
    tensor = psi.reshape(2, 2, 2)
    roots = _singular_combinations(tensor[0], tensor[1])
    if roots is None:
        roots = [_dominant_combination(tensor[0], tensor[1])]
    out = []
    for s, t in roots:
        try:
            out.append(_canonicalize(psi, s, t))
        except DecompositionFailure:
            continue
    return out


def acin_decompose(state):
    """Canonical five-term form of an arbitrary three-qubit state.

    When both roots give valid forms, the one with the larger ``l0`` is
    returned, ties broken by the smaller phase.

    Returns
    -------
    AcinDecomposition
    """
    cands = acin_candidates(state)
    if not cands:
        raise DecompositionFailure("no root of the slice quadratic gave a canonical form")
    return min(cands, key=lambda d: (-round(d.form.lam[0], 12), round(d.form.phi, 12)))


def wlike_standard_form(p):
    """Canonical form of ``a|100> + b|010> + c|001> + q|111>`` in closed form.

    The phase is 0 or pi; it is pi exactly when the product
    ``(a^2 + q^2 - b^2 - c^2)(ab - cq)(ac - bq)`` is negative.
    """
    a, b, c, q = p.astuple()
    d = a * q + b * c
    if d <= 1e-12:
        raise DegenerateTransform("aq + bc vanishes; the W-like transform is singular")
    s_ab, s_ac = a * b + c * q, a * c + b * q
    l0 = np.sqrt(s_ac * s_ab / d)
    abcq = a * b * c * q
    split = a * a + q * q - b * b - c * c
    denom = np.sqrt(s_ab * s_ac * d)
    l1 = np.sqrt(abcq) * abs(split) / denom if denom > 0 else 0.0
    l2 = abs(a * c - b * q) / l0
    l3 = abs(a * b - c * q) / l0
    l4 = 2 * np.sqrt(abcq) / l0
    sign = split * (a * b - c * q) * (a * c - b * q)
    phi = np.pi if sign < 0 else 0.0
    lam = np.array([l0, l1, l2, l3, l4])
    lam[lam < ZERO_LAMBDA] = 0.0
    return AcinForm(tuple(lam / np.linalg.norm(lam)), phi)


def wlike_constraint_residual(p):
    """Residual of the extra constraint tying the W-like canonical coefficients.

    ``l0^2 (l2^2 + l3^2 + l4^2) - 1/4 + (l1/l4)^2 (l2^2 + l4^2)(l3^2 + l4^2)``,
    defined only when ``l4 > 0``.
    """
    l0, l1, l2, l3, l4 = p.lam
    if l4 <= 0:
        raise InvalidForm("constraint undefined when l4 = 0")
    return (l0**2 * (l2**2 + l3**2 + l4**2) - 0.25
            + (l1 / l4) ** 2 * (l2**2 + l4**2) * (l3**2 + l4**2))


def lambda0_from_invariants(J, tol=1e-12):
    """Candidate values of ``l0^2`` from the five invariants.

    Solves ``(J1+J4) x^2 - (J5+J4) x + J2 J3 + J2 J4 + J3 J4 + J4^2 = 0``
    and returns the real roots in [0, 1], largest first. A vanishing
    leading coefficient falls back to the linear equation.

    Raises
    ------
    NoRealRoot
        If the invariants admit no real root in [0, 1].
    """
    j1, j2, j3, j4, j5 = J.astuple()
    qa = j1 + j4
    qb = -(j5 + j4)
    qc = j2 * j3 + j2 * j4 + j3 * j4 + j4 * j4
    if abs(qa) <= tol:
        if abs(qb) <= tol:
            raise NoRealRoot("both leading coefficients vanish")
        roots = [-qc / qb]
    else:
        disc = qb * qb - 4 * qa * qc
        scale = max(qb * qb, abs(4 * qa * qc), 1e-300)
        if disc < -1e-10 * scale:
            raise NoRealRoot(f"negative discriminant {disc:.3g}")
        sq = np.sqrt(max(disc, 0.0))
        roots = [(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)]
    roots = [float(min(max(r, 0.0), 1.0)) for r in roots if -1e-9 <= r <= 1 + 1e-9]
    if not roots:
        raise NoRealRoot("no root in [0, 1]")
    return sorted(roots, reverse=True)
