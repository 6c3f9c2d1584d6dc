import numpy as np
import pytest
from hypothesis import given

from groverian.bloch import (PAULI, SIGMA, adjoint_rotation, adjoint_rotation_closed_form, bloch2,
                             bloch3, canonical_bloch_closed_form, correlators, pauli_coefficients)
from groverian.canonical import AcinForm
from groverian.errors import NotHermitian
from groverian.invariants import bloch_identity_residuals, invariants_from_acin, two_qubit_invariant
from groverian.states import bell_state, from_acin, ghz_state, haar_unitary, reduce

from conftest import S2
from strategies import acin_forms, seeds, states3


def test_bloch3_canonical_v1():
    p = AcinForm.normalized([0.5, 0.4, 0.3, 0.6, 0.2], 0.7)
    l0, l1, l2, l3, l4 = p.lam
    v1 = bloch3(state=from_acin(p)).v1
    expected = [2 * l0 * l1 * np.cos(p.phi), 2 * l0 * l1 * np.sin(p.phi),
                l0**2 - l1**2 - l2**2 - l3**2 - l4**2]
    assert np.allclose(v1, expected, atol=1e-12)


def test_bloch3_product_and_ghz():
    bf = bloch3(state=np.eye(8)[0])
    for v in (bf.v1, bf.v2, bf.v3):
        assert np.allclose(v, [0, 0, 1])
    assert np.isclose(bf.g[2, 2, 2], 1)
    bf = bloch3(state=ghz_state())
    assert np.isclose(bf.g[0, 0, 0], 1)
    assert np.isclose(bf.g[0, 1, 1], -1)  # g_111 = -g_122
    for v in (bf.v1, bf.v2, bf.v3):
        assert np.allclose(v, 0, atol=1e-15)


@given(states3())
def test_bloch3_reconstructs_density(psi):
    rho = np.outer(psi, psi.conj())
    bf = bloch3(rho=rho)
    assert np.max(np.abs(bf.to_density() - rho)) < 1e-12
    assert np.max(np.abs(bloch3(state=psi).coefficients() - bf.coefficients())) < 1e-12


def test_non_hermitian_rejected():
    with pytest.raises(NotHermitian):
        pauli_coefficients(np.triu(np.ones((8, 8))), 3)


def test_bloch2_examples():
    l0, l1 = 0.8, 0.6
    psi = np.array([l0, 0, 0, l1])
    bf = bloch2(np.outer(psi, psi))
    assert np.allclose(bf.gmat, np.diag([2 * l0 * l1, -2 * l0 * l1, 1]))
    bf = bloch2(np.outer(bell_state(), bell_state().conj()))
    assert np.allclose(bf.v1, 0) and np.allclose(bf.v2, 0)
    assert np.allclose(bf.gmat, np.diag([1, -1, 1]))
    bf = bloch2(np.diag([1.0, 0, 0, 0]))
    assert np.allclose(bf.v1, [0, 0, 1]) and np.allclose(bf.v2, [0, 0, 1])
    assert np.allclose(bf.gmat, np.diag([0, 0, 1]))


@given(seeds)
def test_two_qubit_identities(seed):
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    psi /= np.linalg.norm(psi)
    bf = bloch2(np.outer(psi, psi.conj()))
    J = two_qubit_invariant(psi)
    assert abs(bf.v1 @ bf.v1 - (1 - 4 * J)) < 1e-12
    assert abs(bf.v2 @ bf.v2 - (1 - 4 * J)) < 1e-12
    assert abs(np.sum(bf.gmat**2) - (1 + 8 * J)) < 1e-12
    assert np.max(np.abs(bf.to_density() - np.outer(psi, psi.conj()))) < 1e-12


def test_adjoint_rotation_examples():
    assert np.allclose(adjoint_rotation(np.eye(2)), np.eye(3))
    assert np.allclose(adjoint_rotation(PAULI[1]), np.diag([1, -1, -1]))


@given(seeds)
def test_adjoint_rotation_properties(seed):
    u, w = haar_unitary(seed), haar_unitary(seed + 1)
    o = adjoint_rotation(u)
    assert np.max(np.abs(o @ o.T - np.eye(3))) < 1e-12
    assert abs(np.linalg.det(o) - 1) < 1e-12
    lhs = np.einsum("ij,ajk,lk->ail", u, SIGMA, u.conj())
    assert np.max(np.abs(lhs - np.einsum("ab,bij->aij", o, SIGMA))) < 1e-12
    # with U s_a U^+ = o_ab s_b the map reverses products; its transpose is a homomorphism
    assert np.max(np.abs(adjoint_rotation(u @ w) - adjoint_rotation(w) @ o)) < 1e-12
    assert np.max(np.abs(adjoint_rotation(u @ w).T - o.T @ adjoint_rotation(w).T)) < 1e-12
    assert np.max(np.abs(adjoint_rotation_closed_form(u) - o)) < 1e-12


def test_correlators_examples():
    r1, r2, g = correlators(ghz_state())
    assert np.allclose(r1, 0) and np.allclose(r2, 0)
    assert np.allclose(g, np.diag([0, 0, 1]))
    l0, l4 = 0.8, 0.6
    r1, r2, _ = correlators(from_acin(AcinForm((l0, 0, 0, 0, l4))))
    assert np.allclose(r1, [0, 0, l0**2 - l4**2]) and np.allclose(r2, [0, 0, l0**2 - l4**2])
    p = AcinForm.normalized([0.5, 0.4, 0.3, 0.6, 0.0], 1.1)
    l0, l1, _, l3, _ = p.lam
    _, _, g = correlators(from_acin(p))
    assert np.allclose(g[0], [2 * l0 * l3, 0, 2 * l0 * l1 * np.cos(p.phi)])


@given(states3())
def test_correlators_match_marginal(psi):
    r1, r2, g = correlators(psi)
    bf = bloch2(reduce(psi, "AB"))
    assert np.allclose(r1, bf.v1) and np.allclose(r2, bf.v2) and np.allclose(g, bf.gmat)


@given(acin_forms())
def test_canonical_closed_form(p):
    bf, cf = bloch3(state=from_acin(p)), canonical_bloch_closed_form(p)
    for k in ("v1", "v2", "v3", "h1", "h2", "h3", "g"):
        assert np.max(np.abs(getattr(bf, k) - getattr(cf, k))) < 1e-12, k


@given(acin_forms())
def test_invariant_identities(p):
    res = bloch_identity_residuals(from_acin(p), invariants_from_acin(p))
    assert len(res) == 8
    assert max(abs(v) for v in res.values()) < 1e-10


def test_ghz_identities_exact():
    res = bloch_identity_residuals(ghz_state(), invariants_from_acin(AcinForm((S2, 0, 0, 0, S2))))
    assert max(abs(v) for v in res.values()) < 1e-14
