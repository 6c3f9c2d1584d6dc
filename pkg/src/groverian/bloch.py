"""Pauli (Bloch) decomposition of two- and three-qubit density matrices.

Index convention: Pauli index 0..2 stands for x, y, z. For three qubits the
two-site correlators follow the labelling

    h1 -> (B, C),   h2 -> (A, C),   h3 -> (A, B)

so that ``rho = 1/8 [I + v1.s(A) + v2.s(B) + v3.s(C) + h1 s(B)s(C)
+ h2 s(A)s(C) + h3 s(A)s(B) + g s(A)s(B)s(C)]``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian
from .states import check_unitary

IMAG_TOL = 1e-12

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# PAULI[0] is the identity, PAULI[1:] are x, y, z.
PAULI = np.stack([IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z])
SIGMA = PAULI[1:]


def _real(coeffs):
    resid = np.max(np.abs(coeffs.imag)) if coeffs.size else 0.0
    if resid > IMAG_TOL:
        raise NotHermitian(f"Pauli coefficients carry imaginary part {resid:.3g}")
    return np.ascontiguousarray(coeffs.real)


def pauli_coefficients(rho, nqubits):
    """Return ``T[a, b, ...] = Tr[rho sigma_a (x) sigma_b (x) ...]`` for a, b in 0..3."""
    rho = np.asarray(rho, dtype=np.complex128)
    t = rho.reshape((2,) * (2 * nqubits))
    if nqubits == 2:
        c = np.einsum("ijIJ,aIi,bJj->ab", t, PAULI, PAULI)
    elif nqubits == 3:
        c = np.einsum("ijkIJK,aIi,bJj,cKk->abc", t, PAULI, PAULI, PAULI)
    else:
        raise ValueError("only two- and three-qubit density matrices are supported")
    return _real(c)


def _pure_coefficients3(psi):
    t = np.asarray(psi, dtype=np.complex128).reshape(2, 2, 2)
    c = np.einsum("ijk,aiI,bjJ,ckK,IJK->abc", t.conj(), PAULI, PAULI, PAULI, t)
    return _real(c)


@dataclass(frozen=True)
class BlochForm3:
    v1: np.ndarray
    v2: np.ndarray
    v3: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    h3: np.ndarray
    g: np.ndarray

    @classmethod
    def from_coefficients(cls, c):
        return cls(
            v1=c[1:, 0, 0], v2=c[0, 1:, 0], v3=c[0, 0, 1:],
            h1=c[0, 1:, 1:], h2=c[1:, 0, 1:], h3=c[1:, 1:, 0],
            g=c[1:, 1:, 1:],
        )

    def coefficients(self):
        c = np.zeros((4, 4, 4))
        c[0, 0, 0] = 1.0
        c[1:, 0, 0], c[0, 1:, 0], c[0, 0, 1:] = self.v1, self.v2, self.v3
        c[0, 1:, 1:], c[1:, 0, 1:], c[1:, 1:, 0] = self.h1, self.h2, self.h3
        c[1:, 1:, 1:] = self.g
        return c

    def to_density(self):
        """Rebuild the 8x8 density matrix from the Bloch components."""
        ops = np.einsum("aij,bkl,cmn->abcikmjln", PAULI, PAULI, PAULI).reshape(4, 4, 4, 8, 8)
        return np.einsum("abc,abcij->ij", self.coefficients(), ops) / 8


@dataclass(frozen=True)
class BlochForm2:
    v1: np.ndarray
    v2: np.ndarray
    gmat: np.ndarray

    def to_density(self):
        c = np.zeros((4, 4))
        c[0, 0] = 1.0
        c[1:, 0], c[0, 1:], c[1:, 1:] = self.v1, self.v2, self.gmat
        ops = np.einsum("aij,bkl->abikjl", PAULI, PAULI).reshape(4, 4, 4, 4)
        return np.einsum("ab,abij->ij", c, ops) / 4


def bloch3(rho=None, state=None):
    """Bloch components of a three-qubit density matrix or pure state.

    Exactly one of ``rho`` (8x8) or ``state`` (8 amplitudes) must be given.
    """
    if (rho is None) == (state is None):
        raise TypeError("pass exactly one of rho or state")
    if state is not None:
        c = _pure_coefficients3(state)
    else:
        c = pauli_coefficients(rho, 3)
    return BlochForm3.from_coefficients(c)


def bloch2(rho):
    """Bloch components ``(v1, v2, gmat)`` of a 4x4 density matrix."""
    c = pauli_coefficients(rho, 2)
    return BlochForm2(v1=c[1:, 0], v2=c[0, 1:], gmat=c[1:, 1:])


def correlators(state):
    """Return ``(r1, r2, g)`` of the AB marginal of a pure three-qubit state.

    ``r1 = Tr[rho_A sigma]``, ``r2 = Tr[rho_B sigma]`` and
    ``g_ij = Tr[rho_AB sigma_i (x) sigma_j]``. Tracing out C first keeps this
    cheaper than the full three-site decomposition.
    """
    t = np.asarray(state, dtype=np.complex128).reshape(2, 2, 2)
    rho_ab = np.einsum("ijk,IJk->ijIJ", t, t.conj())
    c = _real(np.einsum("ijIJ,aIi,bJj->ab", rho_ab, PAULI, PAULI))
    return c[1:, 0].copy(), c[0, 1:].copy(), c[1:, 1:].copy()


def adjoint_rotation(u):
    """Real 3x3 matrix ``O`` with ``U sigma_a U^dagger = sum_b O[a, b] sigma_b``."""
    u = check_unitary(u)
    conj = np.einsum("ij,ajk,lk->ail", u, SIGMA, u.conj())
    o = 0.5 * np.einsum("aij,bji->ab", conj, SIGMA)
    return _real(o)


def adjoint_rotation_closed_form(u):
    """Same map as :func:`adjoint_rotation`, written out entry by entry."""
    u = check_unitary(u)
    (u11, u12), (u21, u22) = u
    c = np.conj
    o = np.empty((3, 3), dtype=np.complex128)
    o[0, 0] = 0.5 * (u11 * c(u22) + c(u11) * u22 + u12 * c(u21) + c(u12) * u21)
    o[1, 1] = 0.5 * (u11 * c(u22) + c(u11) * u22 - u12 * c(u21) - c(u12) * u21)
    o[2, 2] = abs(u11) ** 2 - abs(u12) ** 2
    o[0, 1] = 0.5j * (u12 * c(u21) + u11 * c(u22) - c(u12) * u21 - c(u11) * u22)
    o[1, 0] = 0.5j * (u12 * c(u21) + c(u11) * u22 - c(u12) * u21 - u11 * c(u22))
    o[0, 2] = u11 * c(u12) + c(u11) * u12
    o[2, 0] = u11 * c(u21) + c(u11) * u21
    o[1, 2] = -1j * (u11 * c(u12) + c(u21) * u22)
    o[2, 1] = 1j * (u11 * c(u21) + c(u12) * u22)
    return _real(o)


def canonical_bloch_closed_form(p):
    """Bloch components of the five-term canonical state, written in closed form.

    ``p`` is an :class:`~groverian.canonical.AcinForm`. Used as an
    independent check on :func:`bloch3`.
    """
    l0, l1, l2, l3, l4 = p.lam
    cs, sn = np.cos(p.phi), np.sin(p.phi)
    v1 = np.array([2 * l0 * l1 * cs, 2 * l0 * l1 * sn, l0**2 - l1**2 - l2**2 - l3**2 - l4**2])
    v2 = np.array([2 * l1 * l3 * cs + 2 * l2 * l4, -2 * l1 * l3 * sn,
                   l0**2 + l1**2 + l2**2 - l3**2 - l4**2])
    v3 = np.array([2 * l1 * l2 * cs + 2 * l3 * l4, -2 * l1 * l2 * sn,
                   l0**2 + l1**2 - l2**2 + l3**2 - l4**2])
    h1 = np.array([
        [2 * l2 * l3 + 2 * l1 * l4 * cs, -2 * l1 * l4 * sn, -2 * l2 * l4 + 2 * l1 * l3 * cs],
        [-2 * l1 * l4 * sn, 2 * l2 * l3 - 2 * l1 * l4 * cs, -2 * l1 * l3 * sn],
        [-2 * l3 * l4 + 2 * l1 * l2 * cs, -2 * l1 * l2 * sn, l0**2 + l1**2 - l2**2 - l3**2 + l4**2],
    ])

    def h_ac(x, y):
        # (A, C) correlator; swapping the roles of lambda2 and lambda3 gives (A, B)
        return np.array([
            [2 * l0 * x, 0.0, 2 * l0 * l1 * cs],
            [0.0, -2 * l0 * x, 2 * l0 * l1 * sn],
            [-2 * y * l4 - 2 * l1 * x * cs, 2 * l1 * x * sn, l0**2 - l1**2 + x**2 - y**2 + l4**2],
        ])

    g = np.zeros((3, 3, 3))
    g[0, 0, 0] = 2 * l0 * l4
    g[0, 1, 1] = g[1, 0, 1] = g[1, 1, 0] = -2 * l0 * l4
    g[0, 0, 2], g[1, 1, 2] = 2 * l0 * l3, -2 * l0 * l3
    g[0, 2, 0], g[1, 2, 1] = 2 * l0 * l2, -2 * l0 * l2
    g[0, 2, 2], g[1, 2, 2] = 2 * l0 * l1 * cs, 2 * l0 * l1 * sn
    g[2, 0, 1] = g[2, 1, 0] = 2 * l1 * l4 * sn
    g[2, 0, 0] = -2 * l2 * l3 - 2 * l1 * l4 * cs
    g[2, 0, 2] = 2 * l2 * l4 - 2 * l1 * l3 * cs
    g[2, 1, 1] = -2 * l2 * l3 + 2 * l1 * l4 * cs
    g[2, 1, 2] = 2 * l1 * l3 * sn
    g[2, 2, 0] = 2 * l3 * l4 - 2 * l1 * l2 * cs
    g[2, 2, 1] = 2 * l1 * l2 * sn
    g[2, 2, 2] = l0**2 - l1**2 + l2**2 + l3**2 - l4**2
    return BlochForm3(v1=v1, v2=v2, v3=v3, h1=h1, h2=h_ac(l2, l3), h3=h_ac(l3, l2), g=g)
