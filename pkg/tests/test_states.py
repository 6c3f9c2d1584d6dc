import numpy as np
import pytest
from hypothesis import given

from groverian.canonical import AcinForm
from groverian.errors import InvalidForm, NotNormalized, NotUnitary, UnknownKind, ZeroState
from groverian.states import (ProductState, apply_local, as_state3, check_unitary, fidelity,
                              from_acin, ghz_state, haar_unitary, normalize, random_state,
                              reduce, w_state)

from conftest import S2, S3
from strategies import seeds, states3

X = np.array([[0, 1], [1, 0]], dtype=complex)
I2 = np.eye(2)


def basis(*idx_amp):
    v = np.zeros(8, dtype=complex)
    for i, a in idx_amp:
        v[i] = a
    return v


def test_normalize_examples():
    assert np.allclose(normalize([2, 0, 0, 0, 0, 0, 0, 0]), basis((0, 1)))
    assert np.allclose(normalize([1, 0, 0, 0, 0, 0, 0, 1]), basis((0, S2), (7, S2)))
    with pytest.raises(ZeroState):
        normalize(np.zeros(8))


def test_renormalize_window():
    v = basis((0, 1 + 5e-7))
    assert abs(np.linalg.norm(as_state3(v)) - 1) < 1e-12
    with pytest.raises(NotNormalized):
        as_state3(basis((0, 1.01)))
    with pytest.raises(InvalidForm):
        as_state3(np.ones(4) / 2)


def test_from_acin_examples():
    assert np.allclose(from_acin(AcinForm((S2, 0, 0, 0, S2))), basis((0, S2), (7, S2)))
    assert np.allclose(from_acin(AcinForm((1, 0, 0, 0, 0))), basis((0, 1)))
    assert np.allclose(from_acin(AcinForm((S3, 0, S3, S3, 0))), basis((0, S3), (5, S3), (6, S3)))


def test_from_acin_phase_on_100():
    psi = from_acin(AcinForm((0.6, 0.8, 0, 0, 0), 0.5))
    assert np.isclose(psi[4], 0.8 * np.exp(0.5j))


def test_apply_local_examples():
    assert np.allclose(apply_local(ghz_state(), I2, I2, I2), ghz_state())
    l0, l2, l3 = 0.6, 0.48, 0.64
    tri = from_acin(AcinForm((l0, 0, l2, l3, 0)))
    # sigma_x on A: |000> -> |100>, |101> -> |001>, |110> -> |010>
    assert np.allclose(apply_local(tri, X, I2, I2), basis((4, l0), (2, l3), (1, l2)))


@given(states3(), seeds)
def test_apply_local_preserves_norm(psi, seed):
    us = [haar_unitary(seed + k) for k in range(3)]
    assert abs(np.linalg.norm(apply_local(psi, *us)) - 1) < 1e-12


@given(states3(), seeds)
def test_apply_local_composes(psi, seed):
    a = [haar_unitary(seed + k) for k in range(3)]
    b = [haar_unitary(seed + 3 + k) for k in range(3)]
    lhs = apply_local(apply_local(psi, *a), *b)
    rhs = apply_local(psi, *[v @ u for u, v in zip(a, b)])
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_reduce_examples():
    assert np.allclose(reduce(ghz_state(), "AB"), np.diag([0.5, 0, 0, 0.5]))
    assert np.allclose(reduce(basis((0, 1)), "A"), np.diag([1, 0]))
    assert np.allclose(reduce(w_state(), "A"), np.diag([2 / 3, 1 / 3]))
    # same marginal in the tri-Bell form reached by relabelling A
    tri = apply_local(w_state(), X, I2, I2)
    assert np.allclose(reduce(tri, "A"), np.diag([1 / 3, 2 / 3]))


def test_reduce_brute_force(rng):
    psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, psi.conj()).reshape(2, 2, 2, 2, 2, 2)
    assert np.allclose(reduce(psi, "BC"), np.einsum("ajkalm->jklm", rho).reshape(4, 4))
    assert np.allclose(reduce(psi, "AC"), np.einsum("ijkljm->iklm", rho).reshape(4, 4))
    assert np.allclose(reduce(psi, "B"), np.einsum("ajbakb->jk", rho))


@given(states3(), seeds)
def test_reduce_trace_and_spectrum(psi, seed):
    for keep in ("A", "B", "C", "AB", "AC", "BC"):
        assert abs(np.trace(reduce(psi, keep)) - 1) < 1e-12
    u = haar_unitary(seed)
    ev0 = np.linalg.eigvalsh(reduce(psi, "A"))
    ev1 = np.linalg.eigvalsh(reduce(apply_local(psi, u, I2, I2), "A"))
    assert np.max(np.abs(ev0 - ev1)) < 1e-10


def test_random_state_examples():
    assert np.array_equal(random_state(1, "haar3"), random_state(1, "haar3"))
    for s in range(20):
        assert abs(np.linalg.norm(random_state(s, "haar3")) - 1) < 1e-12
        assert random_state(s, "haar2").shape == (4,)
    from groverian.canonical import random_acin
    p = random_acin(np.random.default_rng(7))
    assert min(p.lam) >= 0 and 0 <= p.phi <= np.pi
    assert fidelity(random_state(7, "acin-uniform"), from_acin(p)) > 1 - 1e-12
    with pytest.raises(UnknownKind):
        random_state(0, "haar4")


def test_haar_unitary():
    for s in range(10):
        u = haar_unitary(s)
        assert np.max(np.abs(u @ u.conj().T - np.eye(2))) < 1e-12
    assert np.array_equal(haar_unitary(3), haar_unitary(3))
    with pytest.raises(NotUnitary):
        check_unitary(np.array([[1, 1], [0, 1]]))


def test_haar_ensemble_mean():
    # for Haar measure on U(2), |u00|^2 is uniform on [0, 1]
    vals = [abs(haar_unitary(s)[0, 0]) ** 2 for s in range(10_000)]
    assert abs(np.mean(vals) - 0.5) < 0.02
    assert abs(np.var(vals) - 1 / 12) < 0.01


def test_product_state_overlap():
    ps = ProductState(np.array([1, 0]), np.array([S2, S2]), np.array([0, 1]))
    ket = ps.ket()
    assert abs(np.linalg.norm(ket) - 1) < 1e-12
    assert np.isclose(ps.overlap(ket), 1.0)
