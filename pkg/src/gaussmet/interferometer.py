"""Parameterized two-channel interferometer unitaries and their phase-space lifts.

A general two-mode linear-optical transformation is described by a U(2)
matrix parameterized by four angles: a global phase ``phi0``, two relative
phases ``phi`` and ``psi``, and a mixing angle ``omega`` related to the
transmittance ``cos(omega)**2``.  This module builds the matrix, its factor
decomposition, its analytic parameter derivatives, and the real 4x4
symplectic rotation that the unitary induces on quadrature phase space.

Quadrature ordering is fixed module-wide to (x1, p1, x2, p2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

#: Standard symplectic form in the (x1, p1, x2, p2) ordering.
SYMPLECTIC_FORM = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)

# Permutation taking the mode-block ordering (x1, x2, p1, p2) to the
# interleaved ordering (x1, p1, x2, p2).  Involutive: P == P.T == P^-1.
_BLOCK_TO_INTERLEAVED = np.eye(4)[[0, 2, 1, 3]]

PARAM_NAMES = ("phi0", "phi", "psi", "omega")


def _wrap_angle(value: float) -> float:
    """Wrap an angle to [0, 2*pi)."""
    wrapped = math.fmod(value, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    return wrapped


def _fold_mixing_angle(value: float) -> float:
    """Fold the mixing angle into [0, pi/2] (triangle wave with period pi)."""
    folded = math.fmod(value, math.pi)
    if folded < 0.0:
        folded += math.pi
    if folded > math.pi / 2.0:
        folded = math.pi - folded
    return folded


@dataclass(frozen=True)
class ParamVector:
    """The four interferometer parameters, canonically wrapped.

    ``phi0``, ``phi`` and ``psi`` live on [0, 2*pi); ``omega`` on [0, pi/2].
    Out-of-range construction values are wrapped; wrapping is idempotent.
    """

    phi0: float
    phi: float
    psi: float
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "phi0", _wrap_angle(float(self.phi0)))
        object.__setattr__(self, "phi", _wrap_angle(float(self.phi)))
        object.__setattr__(self, "psi", _wrap_angle(float(self.psi)))
        object.__setattr__(self, "omega", _fold_mixing_angle(float(self.omega)))

    @property
    def transmittance(self) -> float:
        """Power transmittance cos(omega)**2 of the mixing stage."""
        return math.cos(self.omega) ** 2

    @property
    def reflectance(self) -> float:
        """Power reflectance sin(omega)**2 of the mixing stage."""
        return math.sin(self.omega) ** 2

    def as_array(self) -> np.ndarray:
        return np.array([self.phi0, self.phi, self.psi, self.omega])

    def replace(self, **kwargs) -> "ParamVector":
        values = {name: getattr(self, name) for name in PARAM_NAMES}
        values.update(kwargs)
        return ParamVector(**values)


def decompose_factors(params: ParamVector):
    """Four-factor decomposition (F0, Fpsi, Fomega, Fphi) of the unitary.

    The product F0 @ Fpsi @ Fomega @ Fphi reproduces :func:`build_unitary`.
    """
    f0 = np.exp(1j * params.phi0) * np.eye(2, dtype=complex)
    fpsi = np.diag([np.exp(1j * params.psi / 2.0), np.exp(-1j * params.psi / 2.0)])
    c, s = math.cos(params.omega), math.sin(params.omega)
    fomega = np.array([[c, s], [-s, c]], dtype=complex)
    fphi = np.diag([np.exp(1j * params.phi / 2.0), np.exp(-1j * params.phi / 2.0)])
    return f0, fpsi, fomega, fphi


def build_unitary(params: ParamVector) -> np.ndarray:
    """2x2 unitary of the interferometer, with determinant exp(2j*phi0).

    Equal to the product of the four factors of :func:`decompose_factors`;
    the diagonal carries the phase (phi + psi)/2 and the off-diagonal
    (psi - phi)/2 on top of the global phase.
    """
    f0, fpsi, fomega, fphi = decompose_factors(params)
    return f0 @ fpsi @ fomega @ fphi


def unitary_derivatives(params: ParamVector):
    """Analytic partial derivatives (dU/dphi0, dU/dphi, dU/dpsi, dU/domega).

    Product-rule differentiation of the factor decomposition; each entry is
    a (generally non-unitary) complex 2x2 matrix.
    """
    f0, fpsi, fomega, fphi = decompose_factors(params)
    u = f0 @ fpsi @ fomega @ fphi
    half_sz = np.diag([0.5, -0.5]).astype(complex)
    d_phi0 = 1j * u
    d_phi = u @ (1j * half_sz)
    d_psi = f0 @ (1j * half_sz) @ fpsi @ fomega @ fphi
    c, s = math.cos(params.omega), math.sin(params.omega)
    d_fomega = np.array([[-s, c], [-c, -s]], dtype=complex)
    d_omega = f0 @ fpsi @ d_fomega @ fphi
    return d_phi0, d_phi, d_psi, d_omega


def real_symplectic_lift(m: np.ndarray) -> np.ndarray:
    """Real 4x4 phase-space image of a complex 2x2 mode matrix.

    Forms [[Re m, -Im m], [Im m, Re m]] in the mode-block ordering
    (x1, x2, p1, p2) and permutes to (x1, p1, x2, p2).  Real-linear in m,
    so it maps derivatives of unitaries to derivatives of rotations.
    """
    m = np.asarray(m, dtype=complex)
    block = np.block([[m.real, -m.imag], [m.imag, m.real]])
    return _BLOCK_TO_INTERLEAVED @ block @ _BLOCK_TO_INTERLEAVED.T


def unitarity_defect(u: np.ndarray) -> float:
    """Max-abs deviation of u^dag u from the identity."""
    u = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def symplectic_from_unitary(u: np.ndarray) -> np.ndarray:
    """Symplectic orthogonal rotation acting on (x1, p1, x2, p2) quadratures.

    Raises:
        ValueError: if ``u`` fails unitarity beyond 1e-10.
    """
    defect = unitarity_defect(u)
    if defect > 1e-10:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e} > 1e-10)")
    return real_symplectic_lift(u)


def bs_unitary() -> np.ndarray:
    """The fixed balanced (50:50) beam-splitter unitary.

    Coincides with the mixing stage at omega = pi/4 and all phases zero:
    (1/sqrt(2)) [[1, 1], [-1, 1]].
    """
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return np.array([[inv_sqrt2, inv_sqrt2], [-inv_sqrt2, inv_sqrt2]], dtype=complex)
