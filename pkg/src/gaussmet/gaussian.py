"""Two-mode Gaussian states: probe construction, evolution and physicality.

States are represented by the quadrature mean vector ``d`` and the 4x4
covariance matrix ``gamma`` in the (x1, p1, x2, p2) ordering, with vacuum
variance 1/2 (gamma_vac = I/2) and means d = sqrt(2) * (Re a1, Im a1,
Re a2, Im a2) for complex displacement amplitudes a1, a2.

Two pure probe families are provided: a two-mode squeezed displaced state
(TMSS) and a pair of single-mode squeezed displaced states (SMSS).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .interferometer import SYMPLECTIC_FORM, _wrap_angle


def _reflection(theta: float) -> np.ndarray:
    """The symmetric reflection [[cos t, sin t], [sin t, -cos t]]."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]])


@dataclass(frozen=True)
class GaussianState:
    """First moments ``d`` (length 4) and covariance ``gamma`` (4x4, symmetric)."""

    d: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float).reshape(4)
        gamma = np.asarray(self.gamma, dtype=float).reshape(4, 4)
        asym = float(np.max(np.abs(gamma - gamma.T)))
        if asym > 1e-12:
            raise ValueError(f"covariance matrix not symmetric (defect {asym:.3e})")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "gamma", gamma)


@dataclass(frozen=True)
class TmssProbe:
    """Two-mode squeezed displaced probe.

    Squeezing magnitude ``r`` with phase ``theta``; mode-i displacement of
    magnitude ``alpha{i}_mag`` and phase ``beta{i}``.
    """

    r: float = 0.0
    theta: float = 0.0
    alpha1_mag: float = 0.0
    beta1: float = 0.0
    alpha2_mag: float = 0.0
    beta2: float = 0.0

    def __post_init__(self):
        if self.r < 0 or self.alpha1_mag < 0 or self.alpha2_mag < 0:
            raise ValueError("squeezing and displacement magnitudes must be >= 0")
        object.__setattr__(self, "theta", _wrap_angle(float(self.theta)))
        object.__setattr__(self, "beta1", _wrap_angle(float(self.beta1)))
        object.__setattr__(self, "beta2", _wrap_angle(float(self.beta2)))


@dataclass(frozen=True)
class SmssProbe:
    """Two independent single-mode squeezed displaced probes.

    Mode-i squeezing magnitude ``r{i}`` with phase ``theta{i}`` (the complex
    squeezing parameter is r_i * exp(2j * theta_i)); displacements as in
    :class:`TmssProbe`.
    """

    r1: float = 0.0
    theta1: float = 0.0
    r2: float = 0.0
    theta2: float = 0.0
    alpha1_mag: float = 0.0
    beta1: float = 0.0
    alpha2_mag: float = 0.0
    beta2: float = 0.0

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0 or self.alpha1_mag < 0 or self.alpha2_mag < 0:
            raise ValueError("squeezing and displacement magnitudes must be >= 0")
        for name in ("theta1", "theta2", "beta1", "beta2"):
            object.__setattr__(self, name, _wrap_angle(float(getattr(self, name))))


Probe = TmssProbe | SmssProbe


@dataclass(frozen=True)
class ResourceBudget:
    """Photon budget split between squeezing and displacement.

    ``n_s`` and ``n_c`` are the mean photon numbers invested in squeezing
    and displacement; ``tau`` weights the displacement between the input
    modes (|alpha1|^2 = tau * n_c) and ``eta`` weights the squeezing for
    the SMSS family (mode-1 squeezed photons = eta * n_s).
    """

    n_s: float
    n_c: float
    tau: float = 0.5
    eta: float = 0.5

    def __post_init__(self):
        if self.n_s < 0 or self.n_c < 0:
            raise ValueError("photon numbers n_s, n_c must be >= 0")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError("displacement weight tau must lie in [0, 1]")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError("squeezing weight eta must lie in [0, 1]")


def _displacement_vector(a1_mag, b1, a2_mag, b2) -> np.ndarray:
    return math.sqrt(2.0) * np.array(
        [
            a1_mag * math.cos(b1),
            a1_mag * math.sin(b1),
            a2_mag * math.cos(b2),
            a2_mag * math.sin(b2),
        ]
    )


def tmss_state(probe: TmssProbe) -> GaussianState:
    """Moments of the two-mode squeezed displaced state.

    The covariance has diagonal blocks cosh(2r)/2 * I and off-diagonal
    blocks -sinh(2r)/2 * [[cos t, sin t], [sin t, -cos t]] at t = theta.
    """
    ch, sh = math.cosh(2.0 * probe.r), math.sinh(2.0 * probe.r)
    s = _reflection(probe.theta)
    gamma = 0.5 * np.block([[ch * np.eye(2), -sh * s], [-sh * s, ch * np.eye(2)]])
    d = _displacement_vector(probe.alpha1_mag, probe.beta1, probe.alpha2_mag, probe.beta2)
    return GaussianState(d=d, gamma=gamma)


def smss_state(probe: SmssProbe) -> GaussianState:
    """Moments of two single-mode squeezed displaced states.

    Each mode contributes (1/2)[cosh(2r_i) * I - sinh(2r_i) * S(2 theta_i)]
    with S the reflection above; at theta1 = pi/2, theta2 = 0 this is the
    diagonal diag(e^{2r1}, e^{-2r1}, e^{-2r2}, e^{2r2}) / 2.
    """
    blocks = []
    for r, theta in ((probe.r1, probe.theta1), (probe.r2, probe.theta2)):
        ch, sh = math.cosh(2.0 * r), math.sinh(2.0 * r)
        blocks.append(0.5 * (ch * np.eye(2) - sh * _reflection(2.0 * theta)))
    gamma = np.zeros((4, 4))
    gamma[:2, :2] = blocks[0]
    gamma[2:, 2:] = blocks[1]
    d = _displacement_vector(probe.alpha1_mag, probe.beta1, probe.alpha2_mag, probe.beta2)
    return GaussianState(d=d, gamma=gamma)


def probe_state(probe: Probe) -> GaussianState:
    """Moments of either probe family."""
    if isinstance(probe, TmssProbe):
        return tmss_state(probe)
    if isinstance(probe, SmssProbe):
        return smss_state(probe)
    raise TypeError(f"unsupported probe type {type(probe).__name__}")


def probe_mean_photons(probe: Probe) -> float:
    """Mean photon number of a probe from its parameters."""
    if isinstance(probe, TmssProbe):
        n_sq = 2.0 * math.sinh(probe.r) ** 2
    else:
        n_sq = math.sinh(probe.r1) ** 2 + math.sinh(probe.r2) ** 2
    return n_sq + probe.alpha1_mag**2 + probe.alpha2_mag**2


def evolve(state: GaussianState, r: np.ndarray) -> GaussianState:
    """Push a state through a symplectic rotation: d -> R d, gamma -> R gamma R^T."""
    r = np.asarray(r, dtype=float)
    gamma = r @ state.gamma @ r.T
    # R gamma R^T picks up ~1e-17 asymmetry from rounding; resymmetrize.
    gamma = 0.5 * (gamma + gamma.T)
    return GaussianState(d=r @ state.d, gamma=gamma)


def mean_photon_number(state: GaussianState) -> float:
    """(tr gamma - 2)/2 + |d|^2/2; exact for this vacuum convention."""
    return float((np.trace(state.gamma) - 2.0) / 2.0 + np.dot(state.d, state.d) / 2.0)


def symplectic_eigenvalues(gamma: np.ndarray) -> np.ndarray:
    """The two symplectic eigenvalues of a 4x4 covariance matrix, ascending.

    Eigenvalues of i Omega gamma come in +/- pairs; their moduli repeat
    each symplectic eigenvalue twice.
    """
    ev = np.sort(np.abs(np.linalg.eigvals(1j * SYMPLECTIC_FORM @ gamma)))
    return ev[[0, 2]]


@dataclass(frozen=True)
class PhysicalityReport:
    """Diagnostics from :func:`check_physical`."""

    symmetry_defect: float
    uncertainty_min_eigenvalue: float
    symplectic_eigenvalues: np.ndarray = field(repr=False)
    physical: bool
    pure: bool


def check_physical(state: GaussianState, tol: float = 1e-9) -> PhysicalityReport:
    """Audit symmetry, the uncertainty relation and purity of a state.

    The uncertainty relation requires gamma + (i/2) Omega >= 0; purity
    requires both symplectic eigenvalues to equal 1/2 within ``tol``.
    """
    gamma = state.gamma
    symmetry_defect = float(np.max(np.abs(gamma - gamma.T)))
    herm = gamma + 0.5j * SYMPLECTIC_FORM
    min_eig = float(np.min(np.linalg.eigvalsh(herm)))
    nu = symplectic_eigenvalues(gamma)
    pure = bool(np.max(np.abs(nu - 0.5)) < tol)
    return PhysicalityReport(
        symmetry_defect=symmetry_defect,
        uncertainty_min_eigenvalue=min_eig,
        symplectic_eigenvalues=nu,
        physical=min_eig >= -tol,
        pure=pure,
    )


def tmss_probe_from_budget(
    budget: ResourceBudget, theta: float = 0.0, beta1: float = 0.0, beta2: float = 0.0
) -> TmssProbe:
    """TMSS probe realizing a budget: 2 sinh^2 r = n_s, |alpha1|^2 = tau n_c."""
    r = math.asinh(math.sqrt(budget.n_s / 2.0))
    return TmssProbe(
        r=r,
        theta=theta,
        alpha1_mag=math.sqrt(budget.tau * budget.n_c),
        beta1=beta1,
        alpha2_mag=math.sqrt((1.0 - budget.tau) * budget.n_c),
        beta2=beta2,
    )


def smss_probe_from_budget(
    budget: ResourceBudget,
    theta1: float = math.pi / 2.0,
    theta2: float = 0.0,
    beta1: float = math.pi / 2.0,
    beta2: float = 0.0,
) -> SmssProbe:
    """SMSS probe realizing a budget: sinh^2 r1 = eta n_s, |alpha1|^2 = tau n_c.

    Default phases put the mode-1 squeezing a quarter turn from mode 2 (the
    combination a balanced beam splitter turns into a TMSS) and displace
    mode 1 along p, mode 2 along x; behind the balanced splitter this
    realizes the phase-matched equal-displacement optimum of the TMSS
    family, and it minimizes the scalar bound among the candidate phase
    conventions.
    """
    r1 = math.asinh(math.sqrt(budget.eta * budget.n_s))
    r2 = math.asinh(math.sqrt((1.0 - budget.eta) * budget.n_s))
    return SmssProbe(
        r1=r1,
        theta1=theta1,
        r2=r2,
        theta2=theta2,
        alpha1_mag=math.sqrt(budget.tau * budget.n_c),
        beta1=beta1,
        alpha2_mag=math.sqrt((1.0 - budget.tau) * budget.n_c),
        beta2=beta2,
    )
