"""Repeated-interaction (collisional) model of the PT reservoir.

Each collision couples the system to a fresh ancilla through a beam-splitter
(partial swap) of angle theta and then discards the ancilla. For uncorrelated
inputs with zero ancilla means the reduced system update is

    sigma' = cos^2(theta) sigma_sys + sin^2(theta) sigma_anc
    d'     = cos(theta) d_sys

With cos^2(theta) = exp(-gamma dt) this reproduces the closed-form Lindblad
solution at every t_k = k dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .gaussian import GaussianState
from .reservoir import PTReservoirSpec, ancilla_state
from .thermalization import ThermalizationTrajectory, evolve, trajectory_from_states

__all__ = [
    "exact_angle",
    "naive_angle",
    "CollisionConfig",
    "collide_once",
    "collide_sequence",
    "simulate",
    "max_covariance_error",
    "richardson_order",
]

AngleRule = Callable[[float, float], float]


def exact_angle(gamma: float, dt: float) -> float:
    """arcsin(sqrt(1 - e^{-gamma dt})): matches the Lindblad map exactly."""
    return math.asin(math.sqrt(-math.expm1(-gamma * dt)))


def naive_angle(gamma: float, dt: float) -> float:
    """sqrt(gamma dt): agrees only to first order in dt."""
    return math.sqrt(gamma * dt)


@dataclass(frozen=True)
class CollisionConfig:
    dt: float
    n_steps: int
    angle_rule: AngleRule = field(default=exact_angle)

    def __post_init__(self):
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ValueError(f"dt must be positive, got {self.dt}")
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            raise ValueError(f"n_steps must be an integer >= 1, got {self.n_steps}")

    def theta(self, gamma: float) -> float:
        th = self.angle_rule(gamma, self.dt)
        if not (0.0 < th <= math.pi / 2):
            raise ValueError(f"mixing angle {th} outside (0, pi/2]; reduce dt")
        return th


def collide_once(system: GaussianState, ancilla: GaussianState, theta: float) -> GaussianState:
    if not (0.0 <= theta <= math.pi / 2):
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
    c, s = math.cos(theta), math.sin(theta)
    sigma = c * c * system.sigma + s * s * ancilla.sigma
    d = c * system.d + s * ancilla.d
    return GaussianState(d, sigma)


def collide_sequence(
    system: GaussianState, ancillas: Iterable[GaussianState], theta: float
) -> list[GaussianState]:
    """States after each collision, starting with ``system`` itself."""
    out = [system]
    for anc in ancillas:
        out.append(collide_once(out[-1], anc, theta))
    return out


def simulate(
    initial: GaussianState,
    spec: PTReservoirSpec,
    config: CollisionConfig,
    bare_beta: bool = False,
) -> ThermalizationTrajectory:
    theta = config.theta(spec.gamma)
    # a new ancilla per collision; identical preparations, never reused
    ancillas = (ancilla_state(spec) for _ in range(config.n_steps))
    states = collide_sequence(initial, ancillas, theta)
    times = config.dt * np.arange(config.n_steps + 1)
    return trajectory_from_states(times, states, spec, bare_beta=bare_beta)


def max_covariance_error(
    traj: ThermalizationTrajectory, initial: GaussianState, spec: PTReservoirSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Per-time max |sigma - sigma_exact| and |d - d_exact| against :func:`evolve`."""
    sig_err = np.empty(len(traj))
    d_err = np.empty(len(traj))
    for k, (t, s) in enumerate(zip(traj.times, traj.states)):
        ref = evolve(initial, spec, t)
        sig_err[k] = np.max(np.abs(s.sigma - ref.sigma))
        d_err[k] = np.max(np.abs(s.d - ref.d))
    return sig_err, d_err


def richardson_order(values: Sequence[float], ratio: float = 2.0) -> float:
    """Convergence order from one quantity computed at steps h, h/r, h/r^2.

    Uses only the three approximations, no reference solution:
    p = log(|X_h - X_{h/r}| / |X_{h/r} - X_{h/r^2}|) / log r.
    """
    x0, x1, x2 = values
    return math.log(abs(x0 - x1) / abs(x1 - x2)) / math.log(ratio)
