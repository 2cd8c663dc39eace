"""Numerical search for locally maximally entangled states.

A state psi is LME when every one-body reduced density matrix equals
identity / d_i. We minimize

    f(psi) = sum_i || rho_i(psi) - I / d_i ||_F^2

over the unit sphere of V = V_1 (x) ... (x) V_n. The zero set of f is the zero
set of the moment map, so f reaching 0 numerically exhibits an LME state.

Subsystem indices are 0-based throughout this module.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .arith import DimVec, product
from .classify import Classification, classify
from .errors import DimOverflow, IndexOutOfRange

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PureState:
    dims: DimVec
    amplitudes: np.ndarray  # complex, shape dims.dims

    def __post_init__(self):
        if self.amplitudes.shape != self.dims.dims:
            raise ValueError(f"amplitude shape {self.amplitudes.shape} != {self.dims.dims}")

    @classmethod
    def from_flat(cls, dims: DimVec, flat) -> "PureState":
        """Build from a row-major flat vector (first index varies slowest) and normalize."""
        arr = np.asarray(flat, dtype=complex).reshape(dims.dims)
        return cls(dims, arr / np.linalg.norm(arr))

    @property
    def flat(self) -> np.ndarray:
        return self.amplitudes.reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class DensityMatrix:
    subsystem: int
    matrix: np.ndarray


@dataclass(frozen=True)
class WitnessConfig:
    restarts: int = 100
    max_iters: int = 5000
    step_tolerance: float = 1e-14
    success_tolerance: float = 1e-10
    seed: int = 42
    initial_step: float = 0.1
    armijo: float = 1e-4
    max_amplitudes: int = 10**6

    def __post_init__(self):
        for name in ("restarts", "max_iters", "step_tolerance", "success_tolerance",
                     "initial_step", "armijo", "max_amplitudes"):
            if not getattr(self, name) > 0:
                raise ValueError(f"WitnessConfig.{name} must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class WitnessReport:
    dims: DimVec
    predicted: Classification
    best_residual: float
    best_state: PureState
    per_subsystem_deviation: list[float]
    restarts_used: int
    iterations_total: int
    succeeded: bool
    best_restart: int = 0
    restart_residuals: list[float] = field(default_factory=list)

    def to_json(self) -> dict:
        """Export schema: dims, amplitudes as [re, im] pairs (row-major), residual, deviations."""
        return {
            "dims": list(self.dims.dims),
            "amplitudes": [[float(z.real), float(z.imag)] for z in self.best_state.flat],
            "residual": float(self.best_residual),
            "per_subsystem_deviation": [float(x) for x in self.per_subsystem_deviation],
        }


def state_from_json(obj: dict) -> PureState:
    from .arith import validate_dims

    dims = validate_dims(obj["dims"])
    flat = np.array([complex(re, im) for re, im in obj["amplitudes"]])
    if flat.size != product(dims):
        raise ValueError(f"expected {product(dims)} amplitudes, got {flat.size}")
    return PureState(dims, flat.reshape(dims.dims))


def restart_rng(seed: int, restart: int) -> np.random.Generator:
    """PCG64 stream for one restart: SeedSequence(seed) spawned at key (restart,)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(restart,))))


def random_state(d: DimVec, seed: int | np.random.Generator) -> PureState:
    """Haar-random pure state: i.i.d. complex Gaussians, normalized."""
    rng = seed if isinstance(seed, np.random.Generator) else restart_rng(seed, 0)
    z = rng.standard_normal(d.dims) + 1j * rng.standard_normal(d.dims)
    return PureState(d, z / np.linalg.norm(z))


def _rho(psi: np.ndarray, i: int) -> np.ndarray:
    m = np.moveaxis(psi, i, 0).reshape(psi.shape[i], -1)
    return m @ m.conj().T


def reduced_density(psi: PureState, i: int) -> DensityMatrix:
    if not 0 <= i < psi.dims.n:
        raise IndexOutOfRange(f"subsystem {i} out of range for n={psi.dims.n}")
    return DensityMatrix(i, _rho(psi.amplitudes, i))


def _deviations(psi: np.ndarray) -> list[np.ndarray]:
    return [_rho(psi, i) - np.eye(di) / di for i, di in enumerate(psi.shape)]


def lme_residual(psi: PureState) -> float:
    return float(sum(np.linalg.norm(a) ** 2 for a in _deviations(psi.amplitudes)))


def lme_residual_purity(psi: PureState) -> float:
    """Same residual via sum_i (tr rho_i^2 - 1/d_i); valid for unit-trace rho_i."""
    total = 0.0
    for i, di in enumerate(psi.dims.dims):
        rho = _rho(psi.amplitudes, i)
        total += float(np.real(np.vdot(rho, rho))) - 1.0 / di
    return total


def _value_and_grad(psi: np.ndarray) -> tuple[float, np.ndarray]:
    """Residual and its Riemannian gradient on the unit sphere (as a complex tensor)."""
    value = 0.0
    grad = np.zeros_like(psi)
    for i, a in enumerate(_deviations(psi)):
        value += float(np.real(np.vdot(a, a)))
        grad += np.moveaxis(np.tensordot(a, psi, axes=(1, i)), 0, i)
    grad *= 4.0
    grad -= np.real(np.vdot(psi, grad)) * psi
    return value, grad


def residual_gradient(psi: PureState) -> np.ndarray:
    """Real-coordinate gradient of the residual, restricted to the sphere.

    The real and imaginary parts of the returned tensor are the partial
    derivatives with respect to Re psi and Im psi of f(psi / |psi|).
    """
    return _value_and_grad(psi.amplitudes)[1]


def verify_witness(psi: PureState, tol: float) -> tuple[bool, list[float]]:
    devs = [float(np.linalg.norm(a)) for a in _deviations(psi.amplitudes)]
    return all(x <= tol for x in devs), devs


def _descend(psi: np.ndarray, cfg: WitnessConfig) -> tuple[np.ndarray, float, int]:
    """Projected gradient descent with Armijo backtracking. Returns (psi, f, iterations)."""
    f, g = _value_and_grad(psi)
    step = cfg.initial_step
    it = 0
    for it in range(1, cfg.max_iters + 1):
        gg = float(np.real(np.vdot(g, g)))
        if gg == 0.0:
            break
        while True:
            trial = psi - step * g
            trial /= np.linalg.norm(trial)
            f_new, g_new = _value_and_grad(trial)
            if f_new <= f - cfg.armijo * step * gg:
                break
            step *= 0.5
            if step < 1e-20:
                return psi, f, it
        decrease = f - f_new
        psi, f, g = trial, f_new, g_new
        # let the step recover after a run of halvings
        step = min(2.0 * step, 1e3)
        if decrease < cfg.step_tolerance:
            break
    return psi, f, it


def search_witness(d: DimVec, cfg: WitnessConfig | None = None,
                   predicted: Classification | None = None) -> WitnessReport:
    """Multi-restart minimization of the LME residual on (d_1, ..., d_n).

    Restart ``r`` starts from a Haar-random state drawn from
    ``restart_rng(cfg.seed, r)``; the search stops at the first restart whose
    residual reaches ``cfg.success_tolerance``. Ties between restarts go to the
    lowest index.
    """
    cfg = cfg or WitnessConfig()
    if product(d) > cfg.max_amplitudes:
        raise DimOverflow(f"{d} needs {product(d)} amplitudes (cap {cfg.max_amplitudes})")
    predicted = predicted or classify(d)

    best_f, best_psi, best_r = np.inf, None, -1
    residuals = []
    total_iters = 0
    for r in range(cfg.restarts):
        start = random_state(d, restart_rng(cfg.seed, r)).amplitudes
        psi, f, iters = _descend(start, cfg)
        total_iters += iters
        residuals.append(f)
        log.debug("restart %d: residual %.3e after %d iterations", r, f, iters)
        if f < best_f:
            best_f, best_psi, best_r = f, psi, r
        if best_f <= cfg.success_tolerance:
            break

    state = PureState(d, best_psi)
    _, devs = verify_witness(state, np.inf)
    return WitnessReport(
        dims=d,
        predicted=predicted,
        best_residual=float(sum(x * x for x in devs)),
        best_state=state,
        per_subsystem_deviation=devs,
        restarts_used=len(residuals),
        iterations_total=total_iters,
        succeeded=sum(x * x for x in devs) <= cfg.success_tolerance,
        best_restart=best_r,
        restart_residuals=residuals,
    )
