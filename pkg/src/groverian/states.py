"""Pure two- and three-qubit states, local unitaries and partial traces.

States are plain complex numpy vectors. A three-qubit state has 8 amplitudes
indexed by ``b = 4*qA + 2*qB + qC`` (qubit A most significant); a two-qubit
state has 4 amplitudes indexed by ``2*qA + qB``. Global phase is never
canonicalized, so compare states with :func:`fidelity`.
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import unitary_group

from .errors import InvalidForm, NotNormalized, NotUnitary, UnknownKind, ZeroState

NORM_TOL = 1e-12
RENORM_TOL = 1e-6
UNITARY_TOL = 1e-12

_SUBSYSTEMS = {"A": 0, "B": 1, "C": 2}

RANDOM_KINDS = ("haar3", "haar2", "acin-uniform", "wlike-uniform")


def normalize(amp):
    """Return ``amp`` scaled to unit norm.

    Raises
    ------
    ZeroState
        If the norm is below 1e-300.
    """
    amp = np.asarray(amp, dtype=np.complex128).ravel()
    nrm = float(np.linalg.norm(amp))
    if not nrm > 1e-300:
        raise ZeroState("state has zero norm")
    return amp / nrm


def _as_state(amp, dim):
    amp = np.asarray(amp, dtype=np.complex128).ravel()
    if amp.shape != (dim,):
        raise InvalidForm(f"expected {dim} amplitudes, got {amp.shape[0]}")
    nrm = float(np.linalg.norm(amp))
    if nrm <= 1e-300:
        raise ZeroState("state has zero norm")
    if abs(nrm - 1.0) > RENORM_TOL:
        raise NotNormalized(f"norm {nrm!r} deviates from 1 by more than {RENORM_TOL}")
    # leave already-normalized input untouched so that serialization round-trips bit for bit
    return amp if abs(nrm - 1.0) <= NORM_TOL else amp / nrm


def as_state3(amp):
    """Validate 8 amplitudes; renormalize if within 1e-6 of unit norm, else raise."""
    return _as_state(amp, 8)


def as_state2(amp):
    """Validate 4 amplitudes; renormalize if within 1e-6 of unit norm, else raise."""
    return _as_state(amp, 4)


def fidelity(psi, phi):
    """Return ``|<psi|phi>|``, the phase-blind overlap used for state equality."""
    return float(abs(np.vdot(psi, phi)))


def check_unitary(u, name="u"):
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NotUnitary(f"{name} must be 2x2, got shape {u.shape}")
    err = np.max(np.abs(u @ u.conj().T - np.eye(2)))
    if err > UNITARY_TOL:
        raise NotUnitary(f"{name} deviates from unitarity by {err:.3g}")
    return u


@dataclass(frozen=True)
class ProductState:
    """Product ansatz ``|q1>|q2>|q3>``; ``q3`` is None for two-site problems."""

    q1: np.ndarray
    q2: np.ndarray
    q3: np.ndarray = None

    def ket(self):
        out = np.kron(self.q1, self.q2)
        if self.q3 is not None:
            out = np.kron(out, self.q3)
        return out

    def overlap(self, psi):
        """Return ``|<q1 q2 q3|psi>|^2``."""
        return float(abs(np.vdot(self.ket(), psi)) ** 2)


def from_acin(p):
    """Return the amplitudes of the canonical five-term state with parameters ``p``."""
    lam = p.lam
    amp = np.zeros(8, dtype=np.complex128)
    amp[0] = lam[0]
    amp[4] = lam[1] * np.exp(1j * p.phi)
    amp[5] = lam[2]
    amp[6] = lam[3]
    amp[7] = lam[4]
    return amp


def from_wlike(p):
    """Return ``a|100> + b|010> + c|001> + q|111>``."""
    amp = np.zeros(8, dtype=np.complex128)
    amp[4], amp[2], amp[1], amp[7] = p.a, p.b, p.c, p.q
    return amp


def ghz_state():
    return normalize([1, 0, 0, 0, 0, 0, 0, 1])


def w_state():
    return normalize([0, 1, 1, 0, 1, 0, 0, 0])


def bell_state():
    return normalize([1, 0, 0, 1])


def apply_local(state, uA, uB, uC):
    """Apply ``uA (x) uB (x) uC`` to a three-qubit state."""
    uA = check_unitary(uA, "uA")
    uB = check_unitary(uB, "uB")
    uC = check_unitary(uC, "uC")
    t = np.asarray(state, dtype=np.complex128).reshape(2, 2, 2)
    return np.einsum("ai,bj,ck,ijk->abc", uA, uB, uC, t).ravel()


def apply_local2(state, uA, uB):
    uA = check_unitary(uA, "uA")
    uB = check_unitary(uB, "uB")
    m = np.asarray(state, dtype=np.complex128).reshape(2, 2)
    return (uA @ m @ uB.T).ravel()


def reduce(state, keep):
    """Partial trace of a pure three-qubit state onto the qubits in ``keep``.

    Parameters
    ----------
    state : array_like, shape (8,)
    keep : str
        One of ``"A", "B", "C", "AB", "AC", "BC"``.

    Returns
    -------
    ndarray
        Density matrix of dimension 2 or 4, rows ordered like the kept qubits.
    """
    if keep not in ("A", "B", "C", "AB", "AC", "BC"):
        raise ValueError(f"cannot keep subsystem {keep!r}")
    t = np.asarray(state, dtype=np.complex128).reshape(2, 2, 2)
    kept = [_SUBSYSTEMS[s] for s in keep]
    traced = [i for i in range(3) if i not in kept]
    t = np.moveaxis(t, kept + traced, range(3)).reshape(2 ** len(kept), -1)
    return t @ t.conj().T


def reduce2(state, keep):
    """Single-qubit reduction of a two-qubit pure state (``keep`` is "A" or "B")."""
    m = np.asarray(state, dtype=np.complex128).reshape(2, 2)
    if keep == "A":
        return m @ m.conj().T
    if keep == "B":
        return m.T @ m.conj()
    raise ValueError(f"cannot keep subsystem {keep!r}")


def haar_unitary(seed):
    """Haar-random 2x2 unitary, deterministic in ``seed``."""
    return unitary_group.rvs(2, random_state=np.random.default_rng(seed))


def haar_amplitudes(rng, dim):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_state(seed, kind="haar3"):
    """Seeded random test state.

    ``haar3``/``haar2`` draw normalized complex Gaussian amplitudes;
    ``acin-uniform`` and ``wlike-uniform`` draw canonical and W-like
    parameters uniformly on the positive sphere octant and return the
    corresponding three-qubit amplitudes.
    """
    if kind not in RANDOM_KINDS:
        raise UnknownKind(f"unknown random state kind {kind!r}")
    rng = np.random.default_rng(seed)
    if kind == "haar3":
        return haar_amplitudes(rng, 8)
    if kind == "haar2":
        return haar_amplitudes(rng, 4)
    from .canonical import random_acin, random_wlike

    if kind == "acin-uniform":
        return from_acin(random_acin(rng))
    return from_wlike(random_wlike(rng))
