"""Truncated-Fock-space ground truth for the Gaussian machinery.

Probe states are built by exponentiating the displacement and squeezing
generators as dense matrices on a two-mode Fock space truncated at a
maximum photon number per mode.  The parameter imprint is captured by the
generator operators G_k = -i V^dag (d_k V) of the interferometer family,
expressed through the Schwinger angular-momentum operators, and the
Fisher information matrix is the symmetrized generator covariance

    H_ij = 4 (Re<G_i G_j> - <G_i><G_j>)

evaluated on the probe.  For the pure probes used here this is the
physical quantum Fisher information; the Gaussian-path covariance summand
is exactly twice it, the displacement summand equal to it, so comparisons
are reported sector by sector.

Truncation policy: states are prepared in a working space a few levels
above the requested cutoff, projected down, renormalized, and the lost
mass recorded as the norm defect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .gaussian import Probe, SmssProbe, TmssProbe
from .interferometer import ParamVector, build_unitary, unitary_derivatives

#: Levels added above the requested cutoff while exponentiating, so that
#: edge corruption of the truncated generators stays out of the kept block.
GUARD_LEVELS = 6

#: Default hard limit for automatic cutoff searches.
MAX_CUTOFF = 60


class CutoffOverflowError(RuntimeError):
    """The requested tolerance needs a cutoff beyond the configured maximum."""


def _annihilator(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, dim)), 1).astype(complex)


@dataclass(frozen=True)
class FockOperators:
    """Dense two-mode operators on the (cutoff+1)^2-dimensional product space."""

    cutoff: int
    a1: np.ndarray = field(repr=False, default=None)
    a2: np.ndarray = field(repr=False, default=None)
    jx: np.ndarray = field(repr=False, default=None)
    jy: np.ndarray = field(repr=False, default=None)
    jz: np.ndarray = field(repr=False, default=None)
    n_total: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        dim = self.cutoff + 1
        a = _annihilator(dim)
        eye = np.eye(dim, dtype=complex)
        a1 = np.kron(a, eye)
        a2 = np.kron(eye, a)
        n1 = a1.conj().T @ a1
        n2 = a2.conj().T @ a2
        cross = a1.conj().T @ a2
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "jx", 0.5 * (cross + cross.conj().T))
        object.__setattr__(self, "jy", (cross - cross.conj().T) / 2j)
        object.__setattr__(self, "jz", 0.5 * (n1 - n2))
        object.__setattr__(self, "n_total", n1 + n2)


@dataclass(frozen=True)
class FockState:
    """Normalized amplitude vector plus the mass lost to truncation."""

    cutoff: int
    amplitudes: np.ndarray = field(repr=False)
    norm_defect: float


def _prepare_raw(probe: Probe, cutoff: int) -> tuple[np.ndarray, float]:
    """State vector at the requested cutoff and its truncation defect."""
    work = cutoff + GUARD_LEVELS
    dim = work + 1
    a = _annihilator(dim)
    eye = np.eye(dim, dtype=complex)
    a1 = np.kron(a, eye)
    a2 = np.kron(eye, a)

    vac = np.zeros(dim * dim, dtype=complex)
    vac[0] = 1.0
    if isinstance(probe, TmssProbe):
        xi = probe.r * np.exp(1j * probe.theta)
        sq = np.conj(xi) * (a1 @ a2) - xi * (a1.conj().T @ a2.conj().T)
        psi = expm(sq) @ vac
    elif isinstance(probe, SmssProbe):
        psi = vac
        for op, r, theta in ((a1, probe.r1, probe.theta1), (a2, probe.r2, probe.theta2)):
            xi = r * np.exp(2j * theta)
            sq = 0.5 * (np.conj(xi) * (op @ op) - xi * (op.conj().T @ op.conj().T))
            psi = expm(sq) @ psi
    else:
        raise TypeError(f"unsupported probe type {type(probe).__name__}")

    for op, mag, beta in (
        (a1, probe.alpha1_mag, probe.beta1),
        (a2, probe.alpha2_mag, probe.beta2),
    ):
        if mag != 0.0:
            alpha = mag * np.exp(1j * beta)
            psi = expm(alpha * op.conj().T - np.conj(alpha) * op) @ psi

    kept = psi.reshape(dim, dim)[: cutoff + 1, : cutoff + 1].ravel()
    norm_sq = float(np.real(np.vdot(kept, kept)))
    return kept, 1.0 - norm_sq


def prepare_state(probe: Probe, cutoff: int) -> FockState:
    """Probe state in the truncated Fock space (squeeze, then displace).

    Raises:
        ValueError: if more than 1e-4 of the state's mass lies above the
            cutoff, i.e. the cutoff is too small for this probe.
    """
    kept, defect = _prepare_raw(probe, cutoff)
    if defect > 1e-4:
        raise ValueError(
            f"cutoff {cutoff} too small: truncation defect {defect:.3e} > 1e-4"
        )
    kept = kept / math.sqrt(1.0 - defect)
    return FockState(cutoff=cutoff, amplitudes=kept, norm_defect=defect)


def cutoff_for(probe: Probe, tol: float, max_cutoff: int = MAX_CUTOFF) -> int:
    """Smallest cutoff whose truncation defect is below ``tol``.

    Doubling search for an upper bracket followed by a bisection; fully
    deterministic for a given probe.

    Raises:
        CutoffOverflowError: if no cutoff up to ``max_cutoff`` suffices.
    """
    if not 0.0 < tol <= 1e-2:
        raise ValueError("tol must lie in (0, 1e-2]")

    def defect(c: int) -> float:
        return _prepare_raw(probe, c)[1]

    hi = 1
    while defect(hi) >= tol:
        if hi >= max_cutoff:
            raise CutoffOverflowError(
                f"defect still >= {tol:g} at the maximum cutoff {max_cutoff}"
            )
        hi = min(2 * hi, max_cutoff)
    lo = hi // 2  # defect(lo) known/assumed >= tol for lo >= 1
    if hi == 1:
        return 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if defect(mid) < tol:
            hi = mid
        else:
            lo = mid
    return hi


def schwinger_generators(params: ParamVector, ops: FockOperators):
    """Hermitian generators (G_phi0, G_phi, G_psi, G_omega) of the family.

    These are the exact generators of the parameterized mode matrix,
    obtained by lifting -i U^dag (d_k U) through 2 Jx = a1^dag a2 + h.c.
    and friends:

        G_phi0 = N
        G_phi  = Jz
        G_psi  = Jz cos(2w) + (Jx cos(phi) + Jy sin(phi)) sin(2w)
        G_omega = 2 (Jy cos(phi) - Jx sin(phi))

    The mixing angle enters at twice its matrix value and G_omega carries a
    factor 2 because the Schwinger rotation angles are half-angles of the
    mode matrix.
    """
    c2w, s2w = math.cos(2.0 * params.omega), math.sin(2.0 * params.omega)
    cp, sp = math.cos(params.phi), math.sin(params.phi)
    g_phi0 = ops.n_total
    g_phi = ops.jz
    g_psi = c2w * ops.jz + s2w * (cp * ops.jx + sp * ops.jy)
    g_omega = 2.0 * (cp * ops.jy - sp * ops.jx)
    return g_phi0, g_phi, g_psi, g_omega


def lifted_generators(params: ParamVector, ops: FockOperators):
    """Generators from the defining relation -i U^dag (d_k U), lifted mode-wise.

    Independent construction used to cross-check :func:`schwinger_generators`:
    each 2x2 generator matrix g is lifted to sum_ij g_ij a_i^dag a_j.
    """
    u = build_unitary(params)
    dus = unitary_derivatives(params)
    a = (ops.a1, ops.a2)
    out = []
    for du in dus:
        g = -1j * u.conj().T @ du
        lifted = sum(
            g[i, j] * (a[i].conj().T @ a[j]) for i in range(2) for j in range(2)
        )
        out.append(lifted)
    return tuple(out)


def expectation(state: FockState, op: np.ndarray) -> complex:
    return complex(np.vdot(state.amplitudes, op @ state.amplitudes))


def qfim_generator(probe: Probe, params: ParamVector, cutoff: int) -> np.ndarray:
    """Fisher information matrix 4(Re<G_i G_j> - <G_i><G_j>) on the probe.

    The real part symmetrizes the generator covariance so the output is a
    real symmetric (PSD up to truncation noise) matrix; the imaginary part
    of <G_i G_j> carries no Fisher information.
    """
    ops = FockOperators(cutoff)
    state = prepare_state(probe, cutoff)
    gens = schwinger_generators(params, ops)
    gpsi = [g @ state.amplitudes for g in gens]
    means = np.array([np.real(np.vdot(state.amplitudes, gp)) for gp in gpsi])
    h = np.empty((4, 4))
    for i in range(4):
        for j in range(i, 4):
            second = np.real(np.vdot(gpsi[i], gpsi[j]))
            h[i, j] = h[j, i] = 4.0 * (second - means[i] * means[j])
    return h


def split_generator_qfim(probe: Probe, params: ParamVector, cutoff: int):
    """Generator QFIM split into covariance and displacement sectors.

    On a displaced squeezed probe the generator covariance separates into
    an alpha-independent part (the zero-displacement probe's QFIM) plus a
    displacement part, because squeezed-vacuum odd moments vanish.  Returns
    ``(cov_part, disp_part)`` with their sum the full generator QFIM.
    """
    if isinstance(probe, TmssProbe):
        bare = TmssProbe(r=probe.r, theta=probe.theta)
    else:
        bare = SmssProbe(
            r1=probe.r1, theta1=probe.theta1, r2=probe.r2, theta2=probe.theta2
        )
    full = qfim_generator(probe, params, cutoff)
    cov_part = qfim_generator(bare, params, cutoff)
    return cov_part, full - cov_part


def mode_unitary_operator(u: np.ndarray, ops: FockOperators) -> np.ndarray:
    """Fock-space unitary V with V^dag a_i V = sum_j u_ij a_j.

    Pushing a state through V transforms its quadrature moments with the
    phase-space rotation of ``u``.
    """
    from scipy.linalg import logm

    k = -1j * logm(np.asarray(u, dtype=complex))
    k = 0.5 * (k + k.conj().T)
    a = (ops.a1, ops.a2)
    quad = sum(k[i, j] * (a[i].conj().T @ a[j]) for i in range(2) for j in range(2))
    return expm(1j * quad)


def quadrature_means(state: FockState, ops: FockOperators) -> np.ndarray:
    """Mean quadrature vector <(x1, p1, x2, p2)> of a Fock state."""
    out = np.empty(4)
    for m, a in enumerate((ops.a1, ops.a2)):
        mean_a = complex(np.vdot(state.amplitudes, a @ state.amplitudes))
        out[2 * m] = math.sqrt(2.0) * mean_a.real
        out[2 * m + 1] = math.sqrt(2.0) * mean_a.imag
    return out


def sector_ratios(probe: Probe, params: ParamVector, cutoff: int, floor: float = 1e-6):
    """Entrywise generator/Gaussian ratios for both QFIM sectors.

    Entries smaller than ``floor`` times the largest entry of the Gaussian
    sector are skipped (0/0 guards).  Returns a dict with the ratio values
    per sector and the matched entry indices.
    """
    from .qfim import qfim_numeric

    gauss = qfim_numeric(probe, params)
    cov_gen, disp_gen = split_generator_qfim(probe, params, cutoff)
    report = {}
    for name, gen, ref in (
        ("covariance", cov_gen, gauss.covariance),
        ("displacement", disp_gen, gauss.displacement),
    ):
        scale = float(np.max(np.abs(ref)))
        ratios, entries = [], []
        if scale > 0.0:
            for i in range(4):
                for j in range(i, 4):
                    if abs(ref[i, j]) > floor * scale:
                        ratios.append(gen[i, j] / ref[i, j])
                        entries.append((i, j))
        report[name] = {"ratios": np.array(ratios), "entries": entries}
    return report
