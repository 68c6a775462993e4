import numpy as np
import pytest

from kicktop import (
    OverlapModel, SystemParams, build_rho_cc, build_rotor_phases,
    build_torsion_smatrix, channel_probabilities, evolve, initial_state,
    linear_entropy, purity_scaling, quantum_discord, reduced_density,
)
from kicktop.errors import DegenerateSystemError
from kicktop.quantum import jx_matrix, overlap_kernel, rotor_phases


def test_jx_matrix_spin_one():
    # spin-1 x-operator in descending-m order: off-diagonal 1/sqrt(2)
    want = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / np.sqrt(2)
    assert np.max(np.abs(jx_matrix(1) - want)) < 1e-15


def test_jx_spectrum_is_integer():
    for J in (1, 5, 40):
        w = np.linalg.eigvalsh(jx_matrix(J))
        assert np.max(np.abs(w - np.arange(-J, J + 1))) < 1e-10


def test_smatrix_unitary_symmetric(small_params):
    S = build_torsion_smatrix(small_params).S
    n = small_params.n
    assert np.max(np.abs(S @ S.conj().T - np.eye(n))) < 1e-12
    assert np.max(np.abs(S - S.T)) < 1e-12


def test_smatrix_expm_oracle():
    from scipy.linalg import expm
    for J, k in ((1, 0.25), (5, 1.0), (10, 0.25)):
        p = SystemParams(k=k, J=J, T=5 * J, N0=5 * J, I=float(J), tau_eps=3.06)
        S = build_torsion_smatrix(p).S
        Jx = jx_matrix(J)
        want = expm(1j * k / (2.0 * J) * (Jx @ Jx))
        assert np.max(np.abs(S - want)) < 1e-8


def test_smatrix_identity_at_zero_kick(small_params):
    p = SystemParams(k=0.0, J=5, T=25, N0=25, I=5, tau_eps=3.06)
    assert np.max(np.abs(build_torsion_smatrix(p).S - np.eye(p.n))) < 1e-12


def test_rotor_phases_hand_computed():
    # N = 3, tau = 2, I = 3: phase = -2 * 3 * 4 / (2 * 3) = -4
    got = rotor_phases(3, 2.0, 3.0)
    assert got == pytest.approx(np.exp(-4j))
    p = SystemParams(k=1, J=1, T=5, N0=5, I=2.0, tau_eps=1.0)
    want = np.exp(-1j * np.array([4 * 5, 5 * 6, 6 * 7]) / 4.0)
    assert np.max(np.abs(build_rotor_phases(p) - want)) < 1e-14


def test_initial_state(small_params):
    c = initial_state(small_params)
    assert c[small_params.channel_index(25)] == 1.0
    assert np.sum(np.abs(c) ** 2) == 1.0


def test_evolve_single_step_manual(small_params):
    S = build_torsion_smatrix(small_params)
    c0 = initial_state(small_params)
    states = evolve(c0, 3, small_params, S)
    assert states.shape == (3, small_params.n)
    want = S.S @ (build_rotor_phases(small_params) * c0)
    assert np.max(np.abs(states[0] - want)) < 1e-14
    # norm preserved
    assert np.allclose(np.sum(np.abs(states) ** 2, axis=1), 1.0)


def test_evolve_shape_mismatch(small_params):
    S = build_torsion_smatrix(small_params)
    with pytest.raises(ValueError):
        evolve(np.ones(3, dtype=complex), 1, small_params, S)


def test_channel_probabilities():
    c = np.array([3 / 5, 4j / 5])
    assert np.allclose(channel_probabilities(c), [9 / 25, 16 / 25])


def test_overlap_kernel_modes(small_params):
    assert np.array_equal(
        overlap_kernel(OverlapModel(), small_params), np.eye(small_params.n))
    K = overlap_kernel(OverlapModel(mode="gaussian", sigma_eps=2.0), small_params)
    assert np.allclose(np.diag(K), 1.0)
    assert np.array_equal(K, K.T)
    # wider packets overlap more
    K_wide = overlap_kernel(
        OverlapModel(mode="gaussian", sigma_eps=20.0), small_params)
    off = ~np.eye(small_params.n, dtype=bool)
    assert np.all(K_wide[off] >= K[off])


def test_overlap_model_validation():
    with pytest.raises(ValueError):
        OverlapModel(mode="plaid")
    with pytest.raises(ValueError):
        OverlapModel(mode="gaussian", sigma_eps=0.0)


def test_reduced_density(small_params):
    S = build_torsion_smatrix(small_params)
    c = evolve(initial_state(small_params), 5, small_params, S)[-1]
    rho = reduced_density(c, OverlapModel(), small_params)
    assert np.max(np.abs(rho - np.diag(np.abs(c) ** 2))) < 1e-14
    rho_g = reduced_density(
        c, OverlapModel(mode="gaussian", sigma_eps=1.0), small_params)
    assert np.trace(rho_g).real == pytest.approx(1.0)
    assert np.max(np.abs(rho_g - rho_g.conj().T)) < 1e-14
    assert np.linalg.eigvalsh(rho_g).min() > -1e-10


def test_linear_entropy_extremes():
    n = 11
    delta = np.zeros(n)
    delta[0] = 1.0
    assert linear_entropy(np.diag(delta), n) == pytest.approx(0.0)
    assert linear_entropy(np.eye(n) / n, n) == pytest.approx(1.0)
    with pytest.raises(DegenerateSystemError):
        linear_entropy(np.eye(1), 1)


def test_purity_scaling():
    # halving hbar_eff halves the purity deficit
    assert purity_scaling(0.5, 0.2, 0.1) == pytest.approx(0.75)
    back = purity_scaling(purity_scaling(0.3, 0.5, 0.25), 0.25, 0.5)
    assert back == pytest.approx(0.3)
    with pytest.warns(UserWarning):
        assert purity_scaling(0.2, 0.1, 0.5) == 0.0
    with pytest.raises(ValueError):
        purity_scaling(0.5, 0.0, 0.1)


def test_discord_and_classical_mixture():
    p = np.array([0.5, 0.3, 0.2])
    rho_cc = build_rho_cc(p)
    assert np.array_equal(np.diag(rho_cc).real, p)
    # classically-correlated mixture carries the same linearized entropy
    assert quantum_discord(rho_cc, 3) == pytest.approx(linear_entropy(rho_cc, 3))
