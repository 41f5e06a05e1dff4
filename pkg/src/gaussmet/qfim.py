"""Quantum Fisher information matrices and Cramer-Rao precision bounds.

The numeric path evaluates, for a Gaussian probe pushed through the
parameterized interferometer, the two summands

    H^disp_mn = (d_m d_U)^T  Gamma_U^-1  (d_n d_U)
    H^cov_mn  = (1/2) Tr[Gamma_U^-1 (d_m Gamma_U) Gamma_U^-1 (d_n Gamma_U)]

with analytic moment derivatives.  These formulas are taken as defining
for this package.  Note for pure Gaussian states the covariance summand
is exactly twice the generator-covariance Fisher information computed by
:mod:`gaussmet.fock_oracle`, while the displacement summand matches it;
the oracle comparison reports these sector ratios rather than silently
rescaling anything.

Closed forms for both probe families, their large-N asymptotic forms and
per-parameter bound extraction live here as independent code paths that
the tests compare against the numeric route.

Parameter order everywhere: (phi0, phi, psi, omega).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import GaussianState, Probe, TmssProbe, probe_state
from .interferometer import (
    ParamVector,
    build_unitary,
    real_symplectic_lift,
    unitary_derivatives,
)

#: Conditioning limit beyond which matrices are treated as singular.
CONDITION_LIMIT = 1e12

#: Relative singular-value cutoff for the pseudo-inverse fallback.
PINV_CUTOFF = 1e-10


class ConditioningError(RuntimeError):
    """A matrix inversion exceeded the conditioning limit."""


@dataclass(frozen=True)
class Qfim:
    """Quantum Fisher information matrix with its two summands retained.

    ``displacement`` is the contribution from parameter variations of the
    first moments, ``covariance`` the one from the covariance matrix;
    ``total`` is their sum.  Parameter order (phi0, phi, psi, omega).
    """

    displacement: np.ndarray
    covariance: np.ndarray

    @property
    def total(self) -> np.ndarray:
        return self.displacement + self.covariance


@dataclass(frozen=True)
class BoundsReport:
    """Per-parameter Cramer-Rao bounds derived from a QFIM (M = 1 repetition).

    ``per_param`` holds the diagonal of the (pseudo-)inverse, ``scalar_bound``
    its trace (infinite when singular).  When ``singular`` is set the
    pseudo-inverse reports only the identifiable directions and unidentifiable
    ones appear as zeros.
    """

    per_param: np.ndarray
    scalar_bound: float
    condition_number: float
    singular: bool
    inverse: np.ndarray


def moment_derivatives(
    probe: Probe, params: ParamVector, u_pre: np.ndarray | None = None
):
    """Analytic derivatives of the evolved moments for each parameter.

    Returns ``(d_derivs, gamma_derivs)`` with shapes (4, 4) and (4, 4, 4);
    index 0 runs over (phi0, phi, psi, omega).  ``u_pre`` optionally inserts
    a fixed unitary between the probe and the parameterized interferometer
    (total transformation U(params) @ u_pre).
    """
    state = probe_state(probe)
    u = build_unitary(params)
    du = unitary_derivatives(params)
    if u_pre is not None:
        u = u @ u_pre
        du = tuple(d @ u_pre for d in du)
    r = real_symplectic_lift(u)
    d_derivs = np.empty((4, 4))
    gamma_derivs = np.empty((4, 4, 4))
    for k, duk in enumerate(du):
        drk = real_symplectic_lift(duk)
        d_derivs[k] = drk @ state.d
        dg = drk @ state.gamma @ r.T
        gamma_derivs[k] = dg + dg.T
    return d_derivs, gamma_derivs


def _evolved_state(probe, params, u_pre):
    state = probe_state(probe)
    u = build_unitary(params)
    if u_pre is not None:
        u = u @ u_pre
    r = real_symplectic_lift(u)
    gamma = r @ state.gamma @ r.T
    return GaussianState(d=r @ state.d, gamma=0.5 * (gamma + gamma.T))


def qfim_numeric(
    probe: Probe, params: ParamVector, u_pre: np.ndarray | None = None
) -> Qfim:
    """QFIM of a probe through the interferometer, from exact moments.

    Raises:
        ConditioningError: if the evolved covariance is too ill-conditioned
            to invert reliably (condition number beyond 1e12).
    """
    evolved = _evolved_state(probe, params, u_pre)
    cond = np.linalg.cond(evolved.gamma)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise ConditioningError(
            f"evolved covariance condition number {cond:.3e} exceeds {CONDITION_LIMIT:.0e}"
        )
    gamma_inv = np.linalg.inv(evolved.gamma)
    d_derivs, gamma_derivs = moment_derivatives(probe, params, u_pre)

    h_disp = d_derivs @ gamma_inv @ d_derivs.T
    h_disp = 0.5 * (h_disp + h_disp.T)

    pulled = np.array([gamma_inv @ g for g in gamma_derivs])
    h_cov = 0.5 * np.einsum("mij,nji->mn", pulled, pulled)
    h_cov = 0.5 * (h_cov + h_cov.T)
    return Qfim(displacement=h_disp, covariance=h_cov)


# --------------------------------------------------------------------------
# Closed forms: TMSS probe family
# --------------------------------------------------------------------------


def tmss_cov_qfim(r: float, omega: float) -> np.ndarray:
    """Covariance QFIM summand for any TMSS probe (closed form).

    Diagonal diag(8 sinh^2 2r, 0, 2 sinh^2 2r sin^2 2w, 8 sinh^2 2r);
    independent of all phases and of phi0, phi, psi.
    """
    sh2 = math.sinh(2.0 * r) ** 2
    return np.diag([8.0 * sh2, 0.0, 2.0 * sh2 * math.sin(2.0 * omega) ** 2, 8.0 * sh2])


def tmss_disp_qfim(probe: TmssProbe, params: ParamVector) -> np.ndarray:
    """Displacement QFIM summand for a TMSS probe (closed form, arbitrary phases).

    Depends on the interferometer point only through phi and omega.
    """
    a1, a2 = probe.alpha1_mag, probe.alpha2_mag
    b1, b2, th = probe.beta1, probe.beta2, probe.theta
    phi, omega = params.phi, params.omega
    ch, sh = math.cosh(2.0 * probe.r), math.sinh(2.0 * probe.r)
    c2w, s2w = math.cos(2.0 * omega), math.sin(2.0 * omega)
    c4w, s4w = math.cos(4.0 * omega), math.sin(4.0 * omega)
    ssum = a1 * a1 + a2 * a2
    cross = a1 * a2
    match = math.cos(th - b1 - b2)

    h = np.empty((4, 4))
    h[0, 0] = 4.0 * ssum * ch - 8.0 * cross * sh * match
    h[0, 1] = 2.0 * (a1 * a1 - a2 * a2) * ch
    h[0, 2] = 2.0 * (a1 * a1 - a2 * a2) * ch * c2w - 2.0 * s2w * (
        -2.0 * cross * math.cos(phi + b1 - b2) * ch
        + (
            a1 * a1 * math.cos(th - phi - 2.0 * b1)
            + a2 * a2 * math.cos(th + phi - 2.0 * b2)
        )
        * sh
    )
    h[0, 3] = -8.0 * cross * ch * math.sin(phi + b1 - b2) + 4.0 * (
        -a1 * a1 * math.sin(th - phi - 2.0 * b1)
        + a2 * a2 * math.sin(th + phi - 2.0 * b2)
    ) * sh
    h[1, 1] = ssum * ch + 2.0 * cross * sh * match
    h[1, 2] = ssum * c2w * ch + (
        2.0 * cross * c2w * match
        + (
            -a1 * a1 * math.cos(th - phi - 2.0 * b1)
            + a2 * a2 * math.cos(th + phi - 2.0 * b2)
        )
        * s2w
    ) * sh
    h[1, 3] = (
        -2.0
        * (
            a1 * a1 * math.sin(th - phi - 2.0 * b1)
            + a2 * a2 * math.sin(th + phi - 2.0 * b2)
        )
        * sh
    )
    # The source's element list carries a sign error on the sin(4w) term of
    # this element (invisible at its display point beta = theta = 0, equal
    # displacements); the sign below is the one the exact numerics support.
    h[2, 2] = ssum * ch + sh * (
        -s4w
        * (
            a1 * a1 * math.cos(th - 2.0 * b1 - phi)
            - a2 * a2 * math.cos(th - 2.0 * b2 + phi)
        )
        + 2.0 * cross * c4w * match
    )
    h[2, 3] = (
        -2.0
        * c2w
        * (
            a1 * a1 * math.sin(th - phi - 2.0 * b1)
            + a2 * a2 * math.sin(th + phi - 2.0 * b2)
        )
        * sh
    )
    h[3, 3] = 4.0 * ssum * ch - 8.0 * cross * sh * match
    for i in range(4):
        for j in range(i):
            h[i, j] = h[j, i]
    return h


def tmss_qfim_asymptotic(
    n_s: float, n_c: float, omega: float, variant: str = "single"
) -> np.ndarray:
    """Leading O(N^2) total QFIM for the phase-matched TMSS probe.

    Two normalizations of the phi sector circulate, differing by a factor
    of two: ``"single"`` has H_22 = n_c n_s, ``"double"`` has
    H_22 = 2 n_c n_s.  Exact numerics support the doubled weight (the
    phase-matched displacement information is 2|alpha|^2 e^{2r}, which
    grows into 2 n_c n_s); both ship so the discrepancy stays visible.
    """
    if variant not in ("single", "double"):
        raise ValueError(f"unknown variant {variant!r}")
    scale = 1.0 if variant == "single" else 2.0
    c2w = math.cos(2.0 * omega)
    s2w = math.sin(2.0 * omega)
    h = np.zeros((4, 4))
    h[0, 0] = 8.0 * n_s * n_s
    h[1, 1] = scale * n_c * n_s
    h[1, 2] = h[2, 1] = scale * n_c * n_s * c2w
    h[2, 2] = 2.0 * n_s * n_s * s2w * s2w + scale * n_c * n_s * c2w * c2w
    h[3, 3] = 8.0 * n_s * n_s
    return h


def scalar_bound_asymptotic(n: float, omega: float) -> float:
    """Large-N scalar bound (1/N^2)(1 + 1/(sin^2 w cos^2 w)) for n_s = n_c = N/2.

    Raises:
        ValueError: at omega in {0, pi/2}, where the bound diverges.
    """
    if n <= 0:
        raise ValueError("total photon number must be positive")
    s, c = math.sin(omega), math.cos(omega)
    if s == 0.0 or c == 0.0 or omega <= 0.0 or omega >= math.pi / 2.0:
        raise ValueError("omega must lie strictly inside (0, pi/2)")
    return (1.0 + 1.0 / (s * s * c * c)) / (n * n)


# --------------------------------------------------------------------------
# Closed forms: SMSS probe family
# --------------------------------------------------------------------------


def smss_cov_qfim(r: float, omega: float, phi: float) -> np.ndarray:
    """Covariance QFIM summand for equal-squeezing SMSS probes (closed form).

    Valid for squeezing phases theta1 = pi/2, theta2 = 0 and r1 = r2 = r;
    singular with rank at most three.
    """
    sh2 = math.sinh(2.0 * r) ** 2
    c2w, s2w = math.cos(2.0 * omega), math.sin(2.0 * omega)
    c4w = math.cos(4.0 * omega)
    h = np.zeros((4, 4))
    h[0, 0] = 8.0 * sh2
    h[1, 1] = math.cosh(4.0 * r) - 1.0
    h[1, 2] = h[2, 1] = 2.0 * sh2 * c2w
    h[2, 2] = 0.5 * sh2 * (c4w - 2.0 * s2w * s2w * math.cos(2.0 * phi) + 3.0)
    h[2, 3] = h[3, 2] = 2.0 * sh2 * s2w * math.sin(2.0 * phi)
    h[3, 3] = 8.0 * sh2 * math.cos(phi) ** 2
    return h


def smss_cov_qfim_general(r1: float, r2: float, omega: float, phi: float) -> np.ndarray:
    """Covariance QFIM summand for SMSS probes with unequal squeezing.

    Element list for squeezing phases theta1 = pi/2, theta2 = 0.  The
    source's (3,3) element prints "cos 4r1" where only cosh 4r1 reduces to
    the equal-squeezing closed form; cosh is implemented.
    """
    ch41, ch42 = math.cosh(4.0 * r1), math.cosh(4.0 * r2)
    ch21, ch22 = math.cosh(2.0 * r1), math.cosh(2.0 * r2)
    sh21, sh22 = math.sinh(2.0 * r1), math.sinh(2.0 * r2)
    c2w, s2w = math.cos(2.0 * omega), math.sin(2.0 * omega)
    c4w = math.cos(4.0 * omega)
    c2p, s2p = math.cos(2.0 * phi), math.sin(2.0 * phi)
    h = np.zeros((4, 4))
    h[0, 0] = 2.0 * (ch41 + ch42 - 2.0)
    h[0, 1] = h[1, 0] = ch41 - ch42
    h[0, 2] = h[2, 0] = c2w * (ch41 - ch42)
    h[1, 1] = 0.5 * (ch41 + ch42 - 2.0)
    h[1, 2] = h[2, 1] = 0.5 * c2w * (ch41 + ch42 - 2.0)
    h[2, 2] = 0.25 * (
        -4.0
        + (1.0 + c4w) * (ch41 + ch42)
        + 4.0 * s2w * s2w * (ch21 * ch22 - c2p * sh21 * sh22)
    )
    h[2, 3] = h[3, 2] = 2.0 * s2w * sh21 * sh22 * s2p
    h[3, 3] = 2.0 * (
        math.cosh(2.0 * (r1 - r2))
        + math.cosh(2.0 * (r1 + r2))
        - 2.0
        + 2.0 * sh21 * sh22 * c2p
    )
    return h


def smss_qfim_asymptotic(n_s: float, n_c: float, omega: float, phi: float) -> np.ndarray:
    """Leading O(N^2) total QFIM for the SMSS probe pair behind a balanced splitter.

    Assumes equal squeezing, squeezing phases a quarter turn apart, equal
    displacements along p.
    """
    c2w, s2w = math.cos(2.0 * omega), math.sin(2.0 * omega)
    c4w = math.cos(4.0 * omega)
    c2p, s2p = math.cos(2.0 * phi), math.sin(2.0 * phi)
    h = np.zeros((4, 4))
    h[0, 0] = 8.0 * n_s * n_s
    h[1, 1] = 2.0 * n_s * n_s
    h[1, 2] = h[2, 1] = 2.0 * n_s * n_s * c2w
    h[2, 2] = 0.5 * n_s * (
        2.0 * s2w * s2w * ((n_c - n_s) * c2p + n_c) + n_s * (c4w + 3.0)
    )
    h[2, 3] = h[3, 2] = 2.0 * n_s * (n_s - n_c) * s2w * s2p
    h[3, 3] = 8.0 * n_s * (n_c * math.sin(phi) ** 2 + n_s * math.cos(phi) ** 2)
    return h


# --------------------------------------------------------------------------
# Bounds
# --------------------------------------------------------------------------


def qcrb_bounds(h: Qfim | np.ndarray) -> BoundsReport:
    """Per-parameter Cramer-Rao bounds and the scalar bound tr(H^-1).

    A QFIM whose condition number exceeds the limit (or that is outright
    rank deficient) is reported as singular: identifiable directions come
    from the pseudo-inverse, the scalar bound is infinite.  Singularity is
    a reported state, never an exception.
    """
    total = h.total if isinstance(h, Qfim) else np.asarray(h, dtype=float)
    total = 0.5 * (total + total.T)
    svals = np.linalg.svd(total, compute_uv=False)
    smax = float(svals[0])
    if smax == 0.0:
        return BoundsReport(
            per_param=np.zeros(4),
            scalar_bound=math.inf,
            condition_number=math.inf,
            singular=True,
            inverse=np.zeros((4, 4)),
        )
    cond = math.inf if svals[-1] == 0.0 else smax / float(svals[-1])
    if cond > CONDITION_LIMIT:
        inv = np.linalg.pinv(total, rcond=PINV_CUTOFF, hermitian=True)
        return BoundsReport(
            per_param=np.diag(inv).copy(),
            scalar_bound=math.inf,
            condition_number=cond,
            singular=True,
            inverse=inv,
        )
    inv = np.linalg.inv(total)
    inv = 0.5 * (inv + inv.T)
    return BoundsReport(
        per_param=np.diag(inv).copy(),
        scalar_bound=float(np.trace(inv)),
        condition_number=cond,
        singular=False,
        inverse=inv,
    )
