"""Parameter sweeps, scaling analysis and probe optimization.

Everything here drives :func:`gaussmet.qfim.qfim_numeric` over grids:
photon-number sweeps for scaling laws, displacement/squeezing weight
sweeps, classification of which QFIM eigenvalues grow quadratically in
the photon number, a deterministic probe-phase optimizer, and the
beam-splitter equivalence report between the two probe families.

Resource conventions: ``N``-sweeps put equal photons in squeezing and
displacement (n_s = n_c = N/2); displacement is split |alpha1|^2 = tau n_c;
SMSS squeezing is split sinh^2 r1 = eta n_s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .gaussian import (
    Probe,
    ResourceBudget,
    smss_probe_from_budget,
    smss_state,
    tmss_probe_from_budget,
    tmss_state,
)
from .interferometer import (
    ParamVector,
    bs_unitary,
    build_unitary,
    real_symplectic_lift,
    symplectic_from_unitary,
    unitary_derivatives,
)
from .qfim import CONDITION_LIMIT, qcrb_bounds, qfim_numeric, tmss_qfim_asymptotic

SWEEP_VARIABLES = ("N", "tau", "eta", "omega", "phase_mismatch")

#: Photon numbers used to classify eigenvalue growth.
N2_FIT_GRID = (100.0, 200.0, 400.0, 800.0)

#: Relative threshold separating quadratically growing eigenvalue
#: coefficients from vanishing ones.
N2_COEFF_THRESHOLD = 1e-6


def log_photon_grid(n_min: float, n_max: float, points_per_decade: int = 7) -> tuple:
    """Logarithmically spaced photon-number grid (inclusive endpoints)."""
    decades = math.log10(n_max / n_min)
    count = max(2, int(round(decades * points_per_decade)) + 1)
    return tuple(np.geomspace(n_min, n_max, count))


# --------------------------------------------------------------------------
# Sweeps
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """One-variable sweep description.

    ``swept`` picks the variable: total photons ``N`` (with n_s = n_c = N/2),
    displacement weight ``tau``, squeezing weight ``eta``, the mixing angle
    ``omega``, or ``phase_mismatch`` (the combination theta - beta1 - beta2
    of the TMSS probe phases).  ``grid`` must be nonempty and strictly
    monotone.  Probe phases not swept are taken from the fields below;
    ``beta1``/``beta2`` left unset default to the family's standard
    convention (0, 0 for TMSS; pi/2, 0 for SMSS).  ``through_bs`` routes
    the probe through a fixed balanced beam splitter before the
    parameterized interferometer.
    """

    probe_family: str
    budget: ResourceBudget
    swept: str
    grid: tuple
    fixed_params: ParamVector
    theta: float = 0.0
    beta1: float | None = None
    beta2: float | None = None
    theta1: float = math.pi / 2.0
    theta2: float = 0.0
    through_bs: bool = False

    def __post_init__(self):
        if self.probe_family not in ("tmss", "smss"):
            raise ValueError(f"unknown probe family {self.probe_family!r}")
        if self.swept not in SWEEP_VARIABLES:
            raise ValueError(f"unknown sweep variable {self.swept!r}")
        grid = tuple(float(v) for v in self.grid)
        if not grid:
            raise ValueError("sweep grid must be nonempty")
        diffs = np.diff(grid)
        if len(grid) > 1 and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError("sweep grid must be strictly monotone")
        lo, hi = {
            "N": (0.0, math.inf),
            "tau": (0.0, 1.0),
            "eta": (0.0, 1.0),
            "omega": (0.0, math.pi / 2.0),
            "phase_mismatch": (-math.inf, math.inf),
        }[self.swept]
        for v in grid:
            if not lo <= v <= hi or (self.swept == "N" and v <= 0.0):
                raise ValueError(f"swept value {v} outside the legal range of {self.swept}")
        object.__setattr__(self, "grid", grid)


@dataclass(frozen=True)
class SweepRow:
    """Result at one grid point."""

    value: float
    scalar_bound: float
    per_param: np.ndarray
    eigenvalues: np.ndarray
    singular: bool


def _resolved_betas(spec: SweepSpec) -> tuple:
    default1 = 0.0 if spec.probe_family == "tmss" else math.pi / 2.0
    beta1 = default1 if spec.beta1 is None else spec.beta1
    beta2 = 0.0 if spec.beta2 is None else spec.beta2
    return beta1, beta2


def _probe_for(spec: SweepSpec, budget: ResourceBudget, theta: float) -> Probe:
    beta1, beta2 = _resolved_betas(spec)
    if spec.probe_family == "tmss":
        return tmss_probe_from_budget(budget, theta=theta, beta1=beta1, beta2=beta2)
    return smss_probe_from_budget(
        budget, theta1=spec.theta1, theta2=spec.theta2, beta1=beta1, beta2=beta2
    )


def _sweep_point(spec: SweepSpec, value: float) -> SweepRow:
    budget = spec.budget
    params = spec.fixed_params
    theta = spec.theta
    if spec.swept == "N":
        budget = ResourceBudget(n_s=value / 2.0, n_c=value / 2.0, tau=budget.tau, eta=budget.eta)
    elif spec.swept == "tau":
        budget = replace(budget, tau=value)
    elif spec.swept == "eta":
        budget = replace(budget, eta=value)
    elif spec.swept == "omega":
        params = params.replace(omega=value)
    elif spec.swept == "phase_mismatch":
        theta = value + sum(_resolved_betas(spec))
    probe = _probe_for(spec, budget, theta)
    u_pre = bs_unitary() if spec.through_bs else None
    q = qfim_numeric(probe, params, u_pre=u_pre)
    bounds = qcrb_bounds(q)
    eig = np.linalg.eigvalsh(q.total)
    return SweepRow(
        value=value,
        scalar_bound=bounds.scalar_bound,
        per_param=bounds.per_param,
        eigenvalues=eig,
        singular=bounds.singular,
    )


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the sweep, one row per grid point, in grid order.

    Rows are computed independently; singular points are flagged, never
    raised.
    """
    return [_sweep_point(spec, v) for v in spec.grid]


# --------------------------------------------------------------------------
# Quadratic-growth classification of QFIM eigenvalues
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseConfig:
    """Probe configuration for :func:`n2_coefficient_rank`.

    ``matrix`` selects which QFIM block to analyze: the ``displacement``
    summand, the ``covariance`` summand, or the ``total``.  The covariance
    analysis invests the whole photon budget in squeezing; the others use
    the equal split n_s = n_c = N/2.
    """

    probe_family: str = "tmss"
    matrix: str = "displacement"
    tau: float = 0.5
    eta: float = 0.5
    theta: float = 0.0
    beta1: float = 0.0
    beta2: float = 0.0
    theta1: float = math.pi / 2.0
    theta2: float = 0.0
    through_bs: bool = False

    def __post_init__(self):
        if self.probe_family not in ("tmss", "smss"):
            raise ValueError(f"unknown probe family {self.probe_family!r}")
        if self.matrix not in ("displacement", "covariance", "total"):
            raise ValueError(f"unknown matrix selector {self.matrix!r}")


@dataclass(frozen=True)
class N2Classification:
    """Outcome of the quadratic-growth fit."""

    count: int
    coefficients: np.ndarray
    threshold: float
    photon_grid: tuple
    eigenvalues: np.ndarray = field(repr=False)


def n2_coefficient_rank(
    probe_family: str,
    config: CaseConfig,
    params: ParamVector,
    photon_grid: tuple = N2_FIT_GRID,
    threshold: float = N2_COEFF_THRESHOLD,
) -> N2Classification:
    """Count the QFIM eigenvalues that grow like the photon number squared.

    Evaluates the selected matrix block on the photon grid, fits each
    sorted eigenvalue to a quadratic polynomial in N, and counts quadratic
    coefficients above ``threshold`` times the largest one.  The quadratic
    fit (rather than a pure c*N^2 regression) keeps O(N) and O(1)
    eigenvalues from leaking into the count.
    """
    config = replace(config, probe_family=probe_family)
    u_pre = bs_unitary() if config.through_bs else None
    eigenvalues = np.empty((len(photon_grid), 4))
    for row, n in enumerate(photon_grid):
        if config.matrix == "covariance":
            budget = ResourceBudget(n_s=float(n), n_c=0.0, tau=config.tau, eta=config.eta)
        else:
            budget = ResourceBudget(
                n_s=float(n) / 2.0, n_c=float(n) / 2.0, tau=config.tau, eta=config.eta
            )
        if probe_family == "tmss":
            probe = tmss_probe_from_budget(
                budget, theta=config.theta, beta1=config.beta1, beta2=config.beta2
            )
        else:
            probe = smss_probe_from_budget(
                budget,
                theta1=config.theta1,
                theta2=config.theta2,
                beta1=config.beta1,
                beta2=config.beta2,
            )
        q = qfim_numeric(probe, params, u_pre=u_pre)
        block = getattr(q, config.matrix) if config.matrix != "total" else q.total
        eigenvalues[row] = np.linalg.eigvalsh(block)
    ns = np.asarray(photon_grid, dtype=float)
    coeffs = np.array([np.polyfit(ns, eigenvalues[:, k], 2)[0] for k in range(4)])
    cmax = float(np.max(np.abs(coeffs)))
    count = int(np.sum(np.abs(coeffs) > threshold * cmax)) if cmax > 0.0 else 0
    return N2Classification(
        count=count,
        coefficients=coeffs,
        threshold=threshold,
        photon_grid=tuple(float(n) for n in photon_grid),
        eigenvalues=eigenvalues,
    )


# --------------------------------------------------------------------------
# Probe optimization
# --------------------------------------------------------------------------

_TMSS_FREE = ("theta", "beta1", "beta2", "tau")
_SMSS_FREE = ("theta1", "theta2", "beta1", "beta2", "tau", "eta")
_ANGLE_VARS = ("theta", "theta1", "theta2", "beta1", "beta2")


@dataclass(frozen=True)
class OptimizeResult:
    """Winning configuration of a probe-phase scan."""

    config: dict
    scalar_bound: float
    all_singular: bool
    trace: tuple


def _pullback_generators(params: ParamVector, u_pre):
    """Parameter generators pulled back to the probe frame.

    Returns the four matrices A_k = R^T dR; with them the QFIM summands
    read H^disp_mn = d^T A_m^T G0inv A_n d and
    H^cov_mn = Tr[M_m M_n]/2, M_k = G0inv A_k G0 + A_k^T, entirely in the
    initial frame, which is what makes batched evaluation cheap.
    """
    u = build_unitary(params)
    dus = unitary_derivatives(params)
    if u_pre is not None:
        u = u @ u_pre
        dus = tuple(d @ u_pre for d in dus)
    r = real_symplectic_lift(u)
    return np.array([r.T @ real_symplectic_lift(du) for du in dus])


def _batched_scalar_bounds(a_mats, gamma, gamma_inv, d_batch):
    """Scalar bounds tr(H^-1) for one covariance and a batch of mean vectors."""
    m = np.array([gamma_inv @ a @ gamma + a.T for a in a_mats])
    h_cov = 0.5 * np.einsum("mij,nji->mn", m, m)
    h_cov = 0.5 * (h_cov + h_cov.T)
    k = np.einsum("mai,ab,nbj->mnij", a_mats, gamma_inv, a_mats)
    h_disp = np.einsum("gi,mnij,gj->gmn", d_batch, k, d_batch)
    h = h_disp + np.transpose(h_disp, (0, 2, 1))
    h = 0.5 * h + h_cov[None, :, :]
    eig = np.linalg.eigvalsh(h)
    good = eig[:, 0] > eig[:, -1] / CONDITION_LIMIT
    bounds = np.full(len(d_batch), math.inf)
    bounds[good] = np.sum(1.0 / eig[good], axis=1)
    return bounds


def _mean_vector_batch(budget, tau, beta1, beta2):
    a1 = np.sqrt(tau * budget.n_c)
    a2 = np.sqrt((1.0 - tau) * budget.n_c)
    root2 = math.sqrt(2.0)
    return np.stack(
        [
            root2 * a1 * np.cos(beta1),
            root2 * a1 * np.sin(beta1),
            root2 * a2 * np.cos(beta2),
            root2 * a2 * np.sin(beta2),
        ],
        axis=-1,
    )


def scalar_bound_of_config(
    probe_family: str,
    budget: ResourceBudget,
    params: ParamVector,
    config: dict,
    u_pre=None,
) -> float:
    """Scalar bound tr(H^-1) for a single probe configuration (inf if singular)."""
    merged = dict(config)
    budget = replace(
        budget, tau=merged.pop("tau", budget.tau), eta=merged.pop("eta", budget.eta)
    )
    if probe_family == "tmss":
        probe = tmss_probe_from_budget(
            budget,
            theta=merged.get("theta", 0.0),
            beta1=merged.get("beta1", 0.0),
            beta2=merged.get("beta2", 0.0),
        )
    else:
        probe = smss_probe_from_budget(
            budget,
            theta1=merged.get("theta1", math.pi / 2.0),
            theta2=merged.get("theta2", 0.0),
            beta1=merged.get("beta1", math.pi / 2.0),
            beta2=merged.get("beta2", 0.0),
        )
    q = qfim_numeric(probe, params, u_pre=u_pre)
    return qcrb_bounds(q).scalar_bound


def _default_config(probe_family: str) -> dict:
    if probe_family == "tmss":
        return {"theta": 0.0, "beta1": 0.0, "beta2": 0.0, "tau": 0.5}
    return {
        "theta1": math.pi / 2.0,
        "theta2": 0.0,
        "beta1": math.pi / 2.0,
        "beta2": 0.0,
        "tau": 0.5,
        "eta": 0.5,
    }


def _axis_grid(name, center, span, points, full):
    if full:
        if name in _ANGLE_VARS:
            return np.linspace(0.0, 2.0 * math.pi, points, endpoint=False)
        return np.linspace(0.0, 1.0, points)
    if name in _ANGLE_VARS:
        return center + np.linspace(-span / 2.0, span / 2.0, points)
    lo = min(max(center - span / 2.0, 0.0), 1.0 - span)
    lo = max(lo, 0.0)
    return lo + np.linspace(0.0, min(span, 1.0), points)


def optimize_probe(
    probe_family: str,
    budget: ResourceBudget,
    params: ParamVector,
    free: tuple,
    angle_points: int = 24,
    tau_points: int = 21,
    rounds: int = 3,
    u_pre=None,
) -> OptimizeResult:
    """Minimize the scalar bound over probe phases and weights.

    Full-range coarse grid scan over the free variables followed by
    ``rounds`` passes of coordinate descent on grids shrunk by 10x per
    round.  Deterministic: ties within 1e-12 of the best value resolve to
    the lexicographically smallest configuration (variables in the
    canonical order of the family).
    """
    allowed = _TMSS_FREE if probe_family == "tmss" else _SMSS_FREE
    free = tuple(f for f in allowed if f in free)  # canonical order
    if not free:
        raise ValueError("the free-variable set must be nonempty")
    defaults = _default_config(probe_family)

    def evaluate(axes_dict, fixed_values):
        names = list(axes_dict)
        mesh = np.meshgrid(*[axes_dict[n] for n in names], indexing="ij")
        flat = {n: m.ravel() for n, m in zip(names, mesh)}
        npts = len(next(iter(flat.values())))
        for name, value in fixed_values.items():
            if name not in flat:
                flat[name] = np.full(npts, value)
        if probe_family == "tmss":
            return flat, _tmss_grid_bounds(budget, params, flat, u_pre)
        return flat, _smss_grid_bounds(budget, params, flat, u_pre)

    axes = {
        name: _axis_grid(
            name, 0.0, 0.0, angle_points if name in _ANGLE_VARS else tau_points, True
        )
        for name in free
    }
    flat, bounds = evaluate(axes, defaults)
    finite = np.isfinite(bounds)
    if not finite.any():
        return OptimizeResult(config={}, scalar_bound=math.inf, all_singular=True, trace=())
    vmin = float(np.min(bounds[finite]))
    tied = np.flatnonzero(bounds <= vmin + 1e-12)
    order = np.lexsort(tuple(flat[n][tied] for n in reversed(free)))
    idx = tied[order[0]]
    best = {n: float(flat[n][idx]) for n in free}
    best_bound = float(bounds[idx])

    trace = [("coarse", dict(best), best_bound)]
    for rnd in range(1, rounds + 1):
        for name in free:
            span = (2.0 * math.pi if name in _ANGLE_VARS else 1.0) * 0.1**rnd
            points = angle_points if name in _ANGLE_VARS else tau_points
            grid = _axis_grid(name, best[name], span, points, False)
            fixed_values = {**defaults, **best}
            fixed_values.pop(name)
            flat, bounds = evaluate({name: grid}, fixed_values)
            finite = np.isfinite(bounds)
            if not finite.any():
                continue
            vmin = float(np.min(bounds[finite]))
            if vmin < best_bound:
                tied = np.flatnonzero(bounds <= vmin + 1e-12)
                idx = tied[np.argsort(flat[name][tied], kind="stable")[0]]
                best_bound = float(bounds[idx])
                best[name] = float(flat[name][idx])
        trace.append((f"round{rnd}", dict(best), best_bound))
    return OptimizeResult(
        config=best, scalar_bound=best_bound, all_singular=False, trace=tuple(trace)
    )


def _tmss_grid_bounds(budget, params, flat, u_pre):
    a_mats = _pullback_generators(params, u_pre)
    thetas = flat["theta"]
    d_all = _mean_vector_batch(budget, flat["tau"], flat["beta1"], flat["beta2"])
    bounds = np.empty(len(thetas))
    r = math.asinh(math.sqrt(budget.n_s / 2.0))
    ch, sh = math.cosh(2.0 * r), math.sinh(2.0 * r)
    for theta in np.unique(thetas):
        sel = thetas == theta
        c, s = math.cos(theta), math.sin(theta)
        refl = np.array([[c, s], [s, -c]])
        gamma = 0.5 * np.block(
            [[ch * np.eye(2), -sh * refl], [-sh * refl, ch * np.eye(2)]]
        )
        gamma_inv = 2.0 * np.block(
            [[ch * np.eye(2), sh * refl], [sh * refl, ch * np.eye(2)]]
        )
        bounds[sel] = _batched_scalar_bounds(a_mats, gamma, gamma_inv, d_all[sel])
    return bounds


def _smss_grid_bounds(budget, params, flat, u_pre):
    a_mats = _pullback_generators(params, u_pre)
    d_all = _mean_vector_batch(budget, flat["tau"], flat["beta1"], flat["beta2"])
    keys = np.stack([flat["theta1"], flat["theta2"], flat["eta"]], axis=1)
    bounds = np.empty(len(d_all))
    for key in np.unique(keys, axis=0):
        sel = np.all(keys == key, axis=1)
        theta1, theta2, eta = key
        r1 = math.asinh(math.sqrt(eta * budget.n_s))
        r2 = math.asinh(math.sqrt((1.0 - eta) * budget.n_s))
        gamma = np.zeros((4, 4))
        for k, (rr, tt) in enumerate(((r1, theta1), (r2, theta2))):
            c, s = math.cos(2.0 * tt), math.sin(2.0 * tt)
            refl = np.array([[c, s], [s, -c]])
            block = 0.5 * (math.cosh(2.0 * rr) * np.eye(2) - math.sinh(2.0 * rr) * refl)
            gamma[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = block
        gamma_inv = np.linalg.inv(gamma)
        bounds[sel] = _batched_scalar_bounds(a_mats, gamma, gamma_inv, d_all[sel])
    return bounds


# --------------------------------------------------------------------------
# Beam-splitter equivalence between the probe families
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    """Covariance identity and QFIM agreement between SMSS and TMSS probes.

    ``covariance_dev`` is the max-abs error of mapping the equal-squeezing
    SMSS covariance through the balanced beam splitter onto the TMSS
    covariance with squeezing phase ``matched_theta``.  ``mapped_total_dev``
    compares full QFIMs for exactly mapped probes (displacements included);
    ``budget_*`` fields compare the two families at the same photon budget
    with each family's own standard phase conventions.  ``asymptotic_rel_dev``
    measures the distance of the splitter-rotated SMSS total from the
    shared large-N form, which shrinks as the budget grows.
    """

    r: float
    matched_theta: float
    covariance_dev: float
    mapped_total_dev: float
    budget_cov_dev: float
    budget_total_rel_dev: float
    budget_rel_matrix: np.ndarray
    asymptotic_rel_dev: float
    tmss_total: np.ndarray
    smss_total: np.ndarray


def relative_deviation_matrix(a: np.ndarray, b: np.ndarray, zero_floor: float = 0.01):
    """Entrywise relative deviation, ignoring entries tiny on both sides.

    Entries below ``zero_floor`` times the overall scale in both matrices
    are treated as agreeing zeros.
    """
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    rel = np.zeros_like(a)
    if scale == 0.0:
        return rel
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            big = max(abs(a[i, j]), abs(b[i, j]))
            if big > zero_floor * scale:
                rel[i, j] = abs(a[i, j] - b[i, j]) / big
    return rel


def smss_tmss_equivalence(
    r: float, params: ParamVector, budget: ResourceBudget
) -> EquivalenceReport:
    """Check that balanced-splitter-rotated SMSS probes replicate TMSS results.

    Uses equal squeezing with phases a quarter turn apart (theta1 = pi/2,
    theta2 = 0); the matching TMSS squeezing phase is 0.
    """
    from .gaussian import SmssProbe, TmssProbe, evolve

    matched_theta = 0.0
    r_bs = symplectic_from_unitary(bs_unitary())
    u_bs = bs_unitary()

    smss_bare = SmssProbe(r1=r, theta1=math.pi / 2.0, r2=r, theta2=0.0)
    mapped = evolve(smss_state(smss_bare), r_bs)
    tmss_bare = TmssProbe(r=r, theta=matched_theta)
    covariance_dev = float(np.max(np.abs(mapped.gamma - tmss_state(tmss_bare).gamma)))

    # Exactly mapped displaced probes: QFIMs must agree identically.
    alpha_s = np.array(
        [
            math.sqrt(budget.tau * budget.n_c) * np.exp(1j * math.pi / 2.0),
            math.sqrt((1.0 - budget.tau) * budget.n_c) * np.exp(1j * math.pi / 2.0),
        ]
    )
    alpha_t = u_bs @ alpha_s
    smss_probe = SmssProbe(
        r1=r,
        theta1=math.pi / 2.0,
        r2=r,
        theta2=0.0,
        alpha1_mag=abs(alpha_s[0]),
        beta1=float(np.angle(alpha_s[0]) % (2.0 * math.pi)),
        alpha2_mag=abs(alpha_s[1]),
        beta2=float(np.angle(alpha_s[1]) % (2.0 * math.pi)),
    )
    tmss_mapped = TmssProbe(
        r=r,
        theta=matched_theta,
        alpha1_mag=abs(alpha_t[0]),
        beta1=float(np.angle(alpha_t[0]) % (2.0 * math.pi)),
        alpha2_mag=abs(alpha_t[1]),
        beta2=float(np.angle(alpha_t[1]) % (2.0 * math.pi)),
    )
    q_smss = qfim_numeric(smss_probe, params, u_pre=u_bs)
    q_tmss_mapped = qfim_numeric(tmss_mapped, params)
    mapped_total_dev = float(np.max(np.abs(q_smss.total - q_tmss_mapped.total)))

    # Same budget, each family's own standard phases.  The default SMSS
    # displacement phases land on the phase-matched TMSS optimum behind the
    # splitter, so the two totals agree essentially exactly at any N; their
    # common distance to the shared large-N form shrinks as N grows.
    tmss_budget = tmss_probe_from_budget(budget)
    smss_budget = smss_probe_from_budget(replace(budget, eta=0.5))
    q_t = qfim_numeric(tmss_budget, params)
    q_s = qfim_numeric(smss_budget, params, u_pre=u_bs)
    budget_cov_dev = float(np.max(np.abs(q_t.covariance - q_s.covariance)))
    rel = relative_deviation_matrix(q_t.total, q_s.total)
    asym = tmss_qfim_asymptotic(budget.n_s, budget.n_c, params.omega, variant="double")
    asym_rel = relative_deviation_matrix(q_s.total, asym)
    return EquivalenceReport(
        r=r,
        matched_theta=matched_theta,
        covariance_dev=covariance_dev,
        mapped_total_dev=mapped_total_dev,
        budget_cov_dev=budget_cov_dev,
        budget_total_rel_dev=float(np.max(rel)),
        budget_rel_matrix=rel,
        asymptotic_rel_dev=float(np.max(asym_rel)),
        tmss_total=q_t.total,
        smss_total=q_s.total,
    )


def smss_phase_preference(budget: ResourceBudget, params: ParamVector) -> dict:
    """Scalar bounds for the two candidate SMSS displacement-phase choices.

    Compares beta = (pi/2, 0) against beta = (pi/2, pi/2) for the
    equal-squeezing SMSS probe behind the balanced splitter and reports
    which minimizes the scalar bound.
    """
    out = {}
    for label, (b1, b2) in (
        ("beta_quarter_zero", (math.pi / 2.0, 0.0)),
        ("beta_quarter_quarter", (math.pi / 2.0, math.pi / 2.0)),
    ):
        out[label] = scalar_bound_of_config(
            "smss",
            budget,
            params,
            {"theta1": math.pi / 2.0, "theta2": 0.0, "beta1": b1, "beta2": b2},
            u_pre=bs_unitary(),
        )
    out["winner"] = min(
        ("beta_quarter_zero", "beta_quarter_quarter"), key=lambda k: out[k]
    )
    return out
