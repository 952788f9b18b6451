"""Closed-form Markovian thermalization against a PT reservoir.

The covariance obeys d sigma/dt = -gamma sigma + gamma (2N + 1) I and the
first moments d d/dt = -(gamma/2) d, so

    d(t)     = d(0) e^{-gamma t / 2}
    sigma(t) = sigma(0) e^{-gamma t} + (1 - e^{-gamma t}) (2N + 1) I
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gaussian import (
    GaussianState,
    coherence,
    mean_energy,
    von_neumann_entropy,
)
from .reservoir import PTReservoirSpec, ancilla_state, effective_beta

__all__ = [
    "ThermalizationTrajectory",
    "evolve",
    "heat_exchanged",
    "entropy_production",
    "run_trajectory",
    "trajectory_from_states",
]


@dataclass(frozen=True)
class ThermalizationTrajectory:
    times: np.ndarray
    states: tuple
    heat: np.ndarray
    coherence: np.ndarray
    entropy: np.ndarray
    entropy_production: np.ndarray
    energy: np.ndarray

    def __len__(self) -> int:
        return len(self.times)


def _check_time(t: float, name: str = "t") -> float:
    t = float(t)
    if not (t >= 0 and math.isfinite(t)):
        raise ValueError(f"{name} must be finite and >= 0, got {t}")
    return t


def evolve(initial: GaussianState, spec: PTReservoirSpec, t: float) -> GaussianState:
    t = _check_time(t)
    if t == 0.0:
        return initial
    decay = math.exp(-spec.gamma * t)
    sigma_inf = ancilla_state(spec).sigma
    # -expm1 keeps (1 - e^{-gamma t}) accurate for small gamma*t
    sigma = initial.sigma * decay + (-math.expm1(-spec.gamma * t)) * sigma_inf
    d = initial.d * math.exp(-0.5 * spec.gamma * t)
    return GaussianState(d, sigma)


def heat_exchanged(initial: GaussianState, spec: PTReservoirSpec, t: float) -> float:
    """Heat absorbed by the system from the reservoir during [0, t].

    Positive when heat flows reservoir -> system.
    """
    final = evolve(initial, spec, t)
    return spec.omega * (np.trace(final.sigma) - np.trace(initial.sigma)) / 4.0


def _production(
    s1: GaussianState, s2: GaussianState, spec: PTReservoirSpec, bare_beta: bool
) -> float:
    beta = spec.beta if bare_beta else effective_beta(spec)
    d_u = mean_energy(s2, spec.omega, covariance_only=True) - mean_energy(
        s1, spec.omega, covariance_only=True
    )
    d_s = von_neumann_entropy(s2) - von_neumann_entropy(s1)
    return d_s - beta * d_u


def entropy_production(
    initial: GaussianState,
    spec: PTReservoirSpec,
    t1: float,
    t2: float,
    bare_beta: bool = False,
) -> float:
    """Entropy produced between ``t1`` and ``t2``: dS - beta_eff * dU.

    ``bare_beta=True`` uses the reservoir's bare beta instead; that variant is
    not guaranteed to be nonnegative once epsilon > 0.
    """
    t1 = _check_time(t1, "t1")
    t2 = _check_time(t2, "t2")
    if t2 < t1:
        raise ValueError(f"t2 ({t2}) must not precede t1 ({t1})")
    if t1 == t2:
        return 0.0
    return _production(evolve(initial, spec, t1), evolve(initial, spec, t2), spec, bare_beta)


def trajectory_from_states(
    times: Sequence[float],
    states: Sequence[GaussianState],
    spec: PTReservoirSpec,
    bare_beta: bool = False,
) -> ThermalizationTrajectory:
    """Attach heat, coherence, entropy and entropy production to a sampled path.

    All cumulative quantities are referenced to ``states[0]``.
    """
    if len(times) != len(states) or len(states) == 0:
        raise ValueError("times and states must be non-empty and of equal length")
    s0 = states[0]
    tr0 = float(np.trace(s0.sigma))
    heat = np.array([spec.omega * (np.trace(s.sigma) - tr0) / 4.0 for s in states])
    heat[0] = 0.0
    ent = np.array([von_neumann_entropy(s) for s in states])
    coh = np.array([coherence(s) for s in states])
    sigma_prod = np.array([_production(s0, s, spec, bare_beta) for s in states])
    sigma_prod[0] = 0.0
    energy = np.array([mean_energy(s, spec.omega) for s in states])
    return ThermalizationTrajectory(
        times=np.asarray(times, dtype=float),
        states=tuple(states),
        heat=heat,
        coherence=coh,
        entropy=ent,
        entropy_production=sigma_prod,
        energy=energy,
    )


def run_trajectory(
    initial: GaussianState,
    spec: PTReservoirSpec,
    t_max: float,
    n_points: int,
    bare_beta: bool = False,
) -> ThermalizationTrajectory:
    if not (t_max > 0 and math.isfinite(t_max)):
        raise ValueError(f"t_max must be positive, got {t_max}")
    if int(n_points) != n_points or n_points < 2:
        raise ValueError(f"n_points must be an integer >= 2, got {n_points}")
    times = np.linspace(0.0, t_max, int(n_points))
    states = [evolve(initial, spec, t) for t in times]
    return trajectory_from_states(times, states, spec, bare_beta=bare_beta)
