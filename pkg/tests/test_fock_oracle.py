"""Truncated-Fock-space oracle: state preparation, generators, Fisher matrix."""

import math

import numpy as np
import pytest

from gaussmet.fock_oracle import (
    CutoffOverflowError,
    FockOperators,
    cutoff_for,
    expectation,
    lifted_generators,
    mode_unitary_operator,
    prepare_state,
    qfim_generator,
    quadrature_means,
    schwinger_generators,
    sector_ratios,
    split_generator_qfim,
)
from gaussmet.gaussian import SmssProbe, TmssProbe, evolve, probe_state
from gaussmet.interferometer import ParamVector, symplectic_from_unitary
from gaussmet.qfim import qfim_numeric


def test_commutator_away_from_truncation_edge():
    ops = FockOperators(6)
    dim = 7
    comm = ops.a1 @ ops.a1.conj().T - ops.a1.conj().T @ ops.a1
    # rows whose mode-1 occupation is below the cutoff see the exact identity
    interior = np.array([n1 < 6 for n1 in range(dim) for _ in range(dim)])
    assert np.max(np.abs(comm[np.ix_(interior, interior)] - np.eye(dim * dim)[np.ix_(interior, interior)])) < 1e-12


def test_angular_momentum_operators_hermitian():
    ops = FockOperators(5)
    for g in (ops.jx, ops.jy, ops.jz, ops.n_total):
        assert np.max(np.abs(g - g.conj().T)) < 1e-12


def test_vacuum_preparation():
    st = prepare_state(TmssProbe(), 3)
    assert st.norm_defect == pytest.approx(0.0, abs=1e-14)
    vac = np.zeros(16)
    vac[0] = 1.0
    assert np.max(np.abs(st.amplitudes - vac)) < 1e-14


def test_two_mode_squeezed_vacuum_schmidt_form():
    r, theta, cutoff = 0.3, 0.9, 12
    st = prepare_state(TmssProbe(r=r, theta=theta), cutoff)
    amp = st.amplitudes.reshape(cutoff + 1, cutoff + 1)
    lam = -np.exp(1j * theta) * math.tanh(r)
    expected = np.array([lam**n for n in range(cutoff + 1)]) / math.cosh(r)
    # amplitudes concentrate on the twin-photon diagonal with geometric weights
    assert np.max(np.abs(np.diag(amp) - expected)) < 1e-9
    off = amp - np.diag(np.diag(amp))
    assert np.max(np.abs(off)) < 1e-12


def test_prepare_rejects_too_small_cutoff():
    with pytest.raises(ValueError):
        prepare_state(TmssProbe(r=1.5), 2)


def test_cutoff_search():
    assert cutoff_for(TmssProbe(), 1e-6) == 1
    # regression value for the reference probe
    assert cutoff_for(TmssProbe(r=0.5), 1e-6) == 8
    loose = cutoff_for(TmssProbe(r=0.4, alpha1_mag=0.3), 1e-4)
    tight = cutoff_for(TmssProbe(r=0.4, alpha1_mag=0.3), 1e-8)
    assert tight >= loose
    with pytest.raises(CutoffOverflowError):
        cutoff_for(TmssProbe(r=1.0), 1e-8, max_cutoff=4)
    with pytest.raises(ValueError):
        cutoff_for(TmssProbe(), 0.5)


def test_generators_match_defining_relation():
    ops = FockOperators(7)
    rng = np.random.default_rng(3)
    for _ in range(5):
        params = ParamVector(*rng.uniform(0, 2 * np.pi, 3), rng.uniform(0, np.pi / 2))
        for g_closed, g_lifted in zip(
            schwinger_generators(params, ops), lifted_generators(params, ops)
        ):
            assert np.max(np.abs(g_closed - g_lifted)) < 1e-12
            assert np.max(np.abs(g_closed - g_closed.conj().T)) < 1e-12


def test_generator_special_points():
    ops = FockOperators(5)
    params = ParamVector(0.7, 1.9, 0.4, 1.2)
    g_phi0, g_phi, g_psi, g_omega = schwinger_generators(params, ops)
    assert np.max(np.abs(g_phi0 - ops.n_total)) < 1e-14
    assert np.max(np.abs(g_phi - ops.jz)) < 1e-14
    # the mixing generator carries twice the bare angular momentum because
    # the Schwinger rotation angle is half the matrix mixing angle
    g_omega0 = schwinger_generators(ParamVector(0, 0, 0, 0.8), ops)[3]
    assert np.max(np.abs(g_omega0 - 2 * ops.jy)) < 1e-14
    g_psi0 = schwinger_generators(ParamVector(0, 0.5, 0.2, 0.0), ops)[2]
    assert np.max(np.abs(g_psi0 - ops.jz)) < 1e-14


def test_generator_qfim_vacuum_is_zero():
    h = qfim_generator(TmssProbe(), ParamVector(0.2, 0.9, 1.4, 0.6), cutoff=3)
    assert np.max(np.abs(h)) < 1e-12


def test_generator_qfim_symmetric_psd_and_means_real():
    probe = TmssProbe(r=0.3, theta=0.4, alpha1_mag=0.3, beta1=0.2, alpha2_mag=0.2, beta2=1.0)
    params = ParamVector(0.5, 1.0, 2.0, 0.8)
    cutoff = cutoff_for(probe, 1e-8)
    h = qfim_generator(probe, params, cutoff)
    assert np.max(np.abs(h - h.T)) < 1e-9
    eig = np.linalg.eigvalsh(h)
    assert eig[0] > -1e-8 * max(eig[-1], 1.0)
    ops = FockOperators(cutoff)
    st = prepare_state(probe, cutoff)
    for g in schwinger_generators(params, ops):
        assert abs(expectation(st, g).imag) < 1e-10


def test_twin_photon_probe_has_no_phi_information():
    # Jz annihilates every two-mode squeezed vacuum state
    for r in (0.1, 0.25, 0.4):
        h = qfim_generator(TmssProbe(r=r), ParamVector(0.1, 0.7, 1.3, 0.5), cutoff=14)
        assert abs(h[1, 1]) < 1e-9


def test_covariance_sector_ratio_constant_in_squeezing():
    params = ParamVector(0.3, 0.8, 1.7, 0.65)
    ratios = []
    for r in (0.1, 0.2, 0.3):
        probe = TmssProbe(r=r)
        h_gen = qfim_generator(probe, params, cutoff_for(probe, 1e-8))
        h_gauss = qfim_numeric(probe, params).covariance
        ratios.append(h_gen[0, 0] / h_gauss[0, 0])
    assert np.max(np.abs(np.diff(ratios))) < 1e-4
    assert ratios[0] == pytest.approx(0.5, abs=1e-4)


def test_sector_split_reassembles_full_matrix():
    probe = TmssProbe(r=0.3, theta=0.2, alpha1_mag=0.4, beta1=0.5, alpha2_mag=0.3, beta2=2.0)
    params = ParamVector(0.4, 1.1, 0.9, 0.7)
    cutoff = cutoff_for(probe, 1e-8)
    cov_part, disp_part = split_generator_qfim(probe, params, cutoff)
    full = qfim_generator(probe, params, cutoff)
    assert np.max(np.abs(cov_part + disp_part - full)) < 1e-9


def test_sector_ratios_against_gaussian_path():
    probe = TmssProbe(r=0.3, theta=0.0, alpha1_mag=0.4, beta1=0.0, alpha2_mag=0.4, beta2=0.0)
    params = ParamVector(0.3, 0.7, 1.1, 0.6)
    report = sector_ratios(probe, params, cutoff_for(probe, 1e-8))
    cov = report["covariance"]["ratios"]
    disp = report["displacement"]["ratios"]
    assert np.max(np.abs(cov - 0.5)) < 1e-4
    assert np.max(np.abs(disp - 1.0)) < 1e-4


def test_phase_rotation_acts_on_moments_like_the_lift():
    from gaussmet.fock_oracle import FockState

    # u = diag(i, 1) turns mode-1 x into -p; check on a displaced state
    u = np.diag([1j, 1.0])
    probe = TmssProbe(alpha1_mag=0.4, beta1=0.7, alpha2_mag=0.3, beta2=2.1)
    cutoff = 18
    ops = FockOperators(cutoff)
    st = prepare_state(probe, cutoff)
    v = mode_unitary_operator(u, ops)
    rotated = FockState(cutoff=cutoff, amplitudes=v @ st.amplitudes, norm_defect=0.0)
    expected = symplectic_from_unitary(u) @ probe_state(probe).d
    assert np.max(np.abs(quadrature_means(rotated, ops) - expected)) < 1e-8


def test_balanced_splitter_moments_match_gaussian_evolution():
    from gaussmet.fock_oracle import FockState
    from gaussmet.interferometer import bs_unitary

    probe = TmssProbe(alpha1_mag=0.5, beta1=0.2, alpha2_mag=0.4, beta2=1.5)
    cutoff = 18
    ops = FockOperators(cutoff)
    st = prepare_state(probe, cutoff)
    v = mode_unitary_operator(bs_unitary(), ops)
    out = FockState(cutoff=cutoff, amplitudes=v @ st.amplitudes, norm_defect=0.0)
    gauss = evolve(probe_state(probe), symplectic_from_unitary(bs_unitary()))
    assert np.max(np.abs(quadrature_means(out, ops) - gauss.d)) < 1e-8


def test_smss_preparation_matches_gaussian_moments():
    probe = SmssProbe(r1=0.3, theta1=1.2, r2=0.4, theta2=0.5, alpha1_mag=0.3, beta1=0.4, alpha2_mag=0.2, beta2=2.5)
    cutoff = 16
    ops = FockOperators(cutoff)
    st = prepare_state(probe, cutoff)
    gauss = probe_state(probe)
    assert np.max(np.abs(quadrature_means(st, ops) - gauss.d)) < 1e-6
    # second moments of x1 via (a1 + a1^dag)/sqrt(2)
    x1 = (ops.a1 + ops.a1.conj().T) / math.sqrt(2)
    var_x1 = np.real(expectation(st, x1 @ x1)) - quadrature_means(st, ops)[0] ** 2
    assert abs(var_x1 - gauss.gamma[0, 0]) < 1e-6
