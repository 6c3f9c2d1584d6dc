"""Numerical maximal product-state overlap of three-qubit pure states.

Two independent maximizers are provided. :func:`pmax_numeric_2site` works on
the two-qubit marginal and maximizes

    P = 1/4 max [1 + r1.s1 + r2.s2 + s1^T g s2]

over unit Bloch vectors ``s1``, ``s2``; the third qubit is optimized out
implicitly. :func:`pmax_numeric_3site` maximizes ``|<q1 q2 q3|psi>|^2``
directly. Both use alternating updates in which each block is set to its
exact maximizer given the others, so the objective never decreases. All
restarts run as one vectorized batch.
"""

from dataclasses import dataclass

import numpy as np

from .bloch import correlators
from .errors import OutOfRange
from .states import ProductState, as_state3

STATIONARY_TOL = 1e-8
# per-restart stopping threshold on the stationarity residual
_RESID_STOP = 1e-11
_DEGENERATE = 1e-14

AXES = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float)


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 32
    max_iters: int = 10_000
    convergence_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1 or self.convergence_tol <= 0:
            raise OutOfRange("restarts, max_iters and convergence_tol must be positive")


@dataclass(frozen=True)
class PmaxResult:
    value: float
    product_state: ProductState
    iterations: int
    converged: bool
    multiplier_residual: float
    restarts: int
    bloch1: np.ndarray = None
    bloch2: np.ndarray = None
    multipliers: tuple = None


def bloch_to_ket(s):
    """Qubit ket whose Bloch vector is the unit vector ``s``."""
    s = np.asarray(s, dtype=float)
    theta = np.arccos(np.clip(s[2], -1.0, 1.0))
    phi = np.arctan2(s[1], s[0])
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def ket_to_bloch(q):
    q = np.asarray(q, dtype=np.complex128)
    return np.array([2 * (q[0].conj() * q[1]).real, 2 * (q[0].conj() * q[1]).imag,
                     abs(q[0]) ** 2 - abs(q[1]) ** 2])


def sphere_samples(rng, n):
    x = rng.standard_normal((n, 3))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _normalize_rows(w, prev, rng):
    n = np.linalg.norm(w, axis=1, keepdims=True)
    bad = n[:, 0] < _DEGENERATE
    out = np.where(bad[:, None], prev, w / np.where(bad[:, None], 1.0, n))
    if bad.any():
        # zero update direction: nudge the previous vector along a random tangent
        kick = rng.standard_normal((int(bad.sum()), 3))
        p = prev[bad]
        kick -= np.sum(kick * p, axis=1, keepdims=True) * p
        kick *= 1e-8 / np.linalg.norm(kick, axis=1, keepdims=True)
        moved = p + kick
        out[bad] = moved / np.linalg.norm(moved, axis=1, keepdims=True)
    return out, n[:, 0]


def ascent_path(state, s2, steps):
    """Objective after every half-step of the two-site ascent from one start.

    Returns an array of length ``2 * steps + 1``; used to check monotonicity.
    """
    r1, r2, g = correlators(as_state3(state))
    rng = np.random.default_rng(0)
    s2 = np.asarray(s2, dtype=float)[None] / np.linalg.norm(s2)
    s1 = np.array([[0.0, 0.0, 1.0]])
    out = [two_site_objective(r1, r2, g, s1, s2)[0]]
    for _ in range(steps):
        s1, _ = _normalize_rows(r1 + s2 @ g.T, s1, rng)
        out.append(two_site_objective(r1, r2, g, s1, s2)[0])
        s2, _ = _normalize_rows(r2 + s1 @ g, s2, rng)
        out.append(two_site_objective(r1, r2, g, s1, s2)[0])
    return np.array(out)


def two_site_objective(r1, r2, g, s1, s2):
    """``1/4 [1 + r1.s1 + r2.s2 + s1^T g s2]`` evaluated row-wise."""
    s1 = np.atleast_2d(s1)
    s2 = np.atleast_2d(s2)
    return 0.25 * (1 + s1 @ r1 + s2 @ r2 + np.einsum("ri,ij,rj->r", s1, g, s2))


def stationarity_residual(r1, r2, g, s1, s2):
    """Largest violation of ``r1 + g s2 = L1 s1`` and ``r2 + g^T s1 = L2 s2``.

    The multipliers are taken as ``L_i = |r_i + ...|``.
    """
    w1 = r1 + g @ s2
    w2 = r2 + g.T @ s1
    l1, l2 = np.linalg.norm(w1), np.linalg.norm(w2)
    res = max(np.linalg.norm(w1 - l1 * s1), np.linalg.norm(w2 - l2 * s2))
    return float(res), (float(l1), float(l2))


def _third_factor(psi, q1, q2):
    c = np.einsum("ijk,i,j->k", psi.reshape(2, 2, 2), q1.conj(), q2.conj())
    n = np.linalg.norm(c)
    return c / n if n > 0 else np.array([1.0, 0.0], dtype=np.complex128)


def pmax_numeric_2site(state, cfg=None):
    """Maximal product overlap from the AB marginal by alternating ascent.

    Each step sets ``s1 <- normalize(r1 + g s2)`` and then
    ``s2 <- normalize(r2 + g^T s1)``. Restarts are the six axis directions
    plus ``cfg.restarts`` seeded uniform directions for ``s2``; the best
    restart wins, ties going to the lower restart index.

    Returns
    -------
    PmaxResult
        ``converged`` is False when the best restart's stationarity residual
        is not below 1e-8; the best value found is still reported.
    """
    cfg = cfg or OptimizerConfig()
    psi = as_state3(state)
    r1, r2, g = correlators(psi)
    rng = np.random.default_rng(cfg.seed)
    s2 = np.vstack([AXES, sphere_samples(rng, cfg.restarts)])
    nrest = s2.shape[0]
    s1, _ = _normalize_rows(r1 + s2 @ g.T, AXES[np.arange(nrest) % 6], rng)
    val = two_site_objective(r1, r2, g, s1, s2)
    active = np.ones(nrest, dtype=bool)
    iters = np.zeros(nrest, dtype=int)

    for it in range(1, cfg.max_iters + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        a1, a2 = s1[idx], s2[idx]
        a1, _ = _normalize_rows(r1 + a2 @ g.T, a1, rng)
        a2, _ = _normalize_rows(r2 + a1 @ g, a2, rng)
        new = two_site_objective(r1, r2, g, a1, a2)
        w1 = r1 + a2 @ g.T
        resid = np.linalg.norm(w1 - np.linalg.norm(w1, axis=1, keepdims=True) * a1, axis=1)
        gain = new - val[idx]
        s1[idx], s2[idx], val[idx] = a1, a2, new
        iters[idx] = it
        done = (gain <= cfg.convergence_tol) & (resid <= _RESID_STOP)
        active[idx[done]] = False

    best = int(np.argmax(val))  # argmax returns the lowest index among ties
    b1, b2 = s1[best], s2[best]
    res, mult = stationarity_residual(r1, r2, g, b1, b2)
    q1, q2 = bloch_to_ket(b1), bloch_to_ket(b2)
    prod = ProductState(q1, q2, _third_factor(psi, q1, q2))
    return PmaxResult(
        value=float(min(val[best], 1.0)), product_state=prod, iterations=int(iters.max()),
        converged=res < STATIONARY_TOL, multiplier_residual=res, restarts=nrest,
        bloch1=b1, bloch2=b2, multipliers=mult,
    )


def _normalize_kets(c, prev):
    n = np.linalg.norm(c, axis=1, keepdims=True)
    out = np.where(n > _DEGENERATE, c / np.where(n > _DEGENERATE, n, 1.0), prev)
    return out, n[:, 0]


def _tangent_residual(c, q):
    # component of the update direction orthogonal to the current factor
    proj = np.sum(q.conj() * c, axis=1, keepdims=True)
    return np.linalg.norm(c - proj * q, axis=1)


def pmax_numeric_3site(state, cfg=None):
    """Maximal overlap ``|<q1 q2 q3|psi>|^2`` by alternating factor updates.

    Each factor is replaced by the normalized contraction of ``psi`` with the
    conjugates of the other two, which is its exact maximizer. Starts use
    the six axis kets for ``(q2, q3)`` and ``cfg.restarts`` seeded random pairs.
    """
    cfg = cfg or OptimizerConfig()
    psi = as_state3(state)
    t = psi.reshape(2, 2, 2)
    rng = np.random.default_rng(cfg.seed)
    dirs2 = np.vstack([AXES, sphere_samples(rng, cfg.restarts)])
    dirs3 = np.vstack([AXES, sphere_samples(rng, cfg.restarts)])
    q2 = np.array([bloch_to_ket(s) for s in dirs2])
    q3 = np.array([bloch_to_ket(s) for s in dirs3])
    nrest = q2.shape[0]
    q1, _ = _normalize_kets(np.einsum("ijk,rj,rk->ri", t, q2.conj(), q3.conj()), q2)
    val = np.zeros(nrest)
    active = np.ones(nrest, dtype=bool)
    iters = np.zeros(nrest, dtype=int)

    for it in range(1, cfg.max_iters + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        a1, a2, a3 = q1[idx], q2[idx], q3[idx]
        a1, _ = _normalize_kets(np.einsum("ijk,rj,rk->ri", t, a2.conj(), a3.conj()), a1)
        a2, _ = _normalize_kets(np.einsum("ijk,ri,rk->rj", t, a1.conj(), a3.conj()), a2)
        c3 = np.einsum("ijk,ri,rj->rk", t, a1.conj(), a2.conj())
        a3, n3 = _normalize_kets(c3, a3)
        new = n3**2
        c1 = np.einsum("ijk,rj,rk->ri", t, a2.conj(), a3.conj())
        resid = _tangent_residual(c1, a1)
        gain = new - val[idx]
        q1[idx], q2[idx], q3[idx], val[idx] = a1, a2, a3, new
        iters[idx] = it
        done = (gain <= cfg.convergence_tol) & (resid <= _RESID_STOP)
        active[idx[done]] = False

    best = int(np.argmax(val))
    b1, b2, b3 = q1[best], q2[best], q3[best]
    res = max(
        _tangent_residual(np.einsum("ijk,j,k->i", t, b2.conj(), b3.conj())[None], b1[None])[0],
        _tangent_residual(np.einsum("ijk,i,k->j", t, b1.conj(), b3.conj())[None], b2[None])[0],
        _tangent_residual(np.einsum("ijk,i,j->k", t, b1.conj(), b2.conj())[None], b3[None])[0],
    )
    return PmaxResult(
        value=float(min(val[best], 1.0)), product_state=ProductState(b1, b2, b3),
        iterations=int(iters.max()), converged=bool(res < STATIONARY_TOL),
        multiplier_residual=float(res), restarts=nrest,
    )


def sphere_grid(resolution):
    """``resolution x resolution`` (theta, phi) grid of unit vectors, poles included."""
    theta = np.linspace(0.0, np.pi, resolution)
    phi = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    return np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1).reshape(-1, 3)


def pmax_grid_lower_bound(state, resolution=64, chunk=512):
    """Exhaustive grid maximum of the two-site objective; a lower bound on P_max."""
    if resolution < 8:
        raise OutOfRange("resolution must be at least 8")
    r1, r2, g = correlators(as_state3(state))
    pts = sphere_grid(resolution)
    lin2 = pts @ r2
    gp = pts @ g.T  # rows: g s2
    best = -np.inf
    for start in range(0, pts.shape[0], chunk):
        s1 = pts[start:start + chunk]
        f = (s1 @ r1)[:, None] + lin2[None, :] + s1 @ gp.T
        best = max(best, float(f.max()))
    return 0.25 * (1.0 + best)
