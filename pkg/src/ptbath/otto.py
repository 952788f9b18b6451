"""Quasistatic quantum Otto cycle with a PT-symmetric hot reservoir.

Strokes (working substance: one oscillator, frequency w_i <-> w_f):

1. adiabatic w_i -> w_f, occupation of the cold bath preserved   (work W1)
2. full thermalization with the hot bath at beta_hot_eff, at w_f  (heat Q2)
3. adiabatic w_f -> w_i, occupation of the hot bath preserved     (work W3)
4. full thermalization with the cold bath at beta_cold, at w_i    (heat Q4)

Energies come from trace formulas on the stroke-endpoint covariances. The
reservoir's constant w*eps shift cancels in every difference and is omitted.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .reservoir import pt_mu

__all__ = [
    "Regime",
    "RegimeError",
    "OttoCycleSpec",
    "OttoCycleResult",
    "hot_effective_beta",
    "stroke_energies",
    "classify_regime",
    "performance",
    "ideal_efficiency",
    "ideal_cop",
    "critical_epsilon",
    "sweep_epsilon",
]


class Regime(str, enum.Enum):
    ENGINE = "Engine"
    REFRIGERATOR = "Refrigerator"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


class RegimeError(ValueError):
    """A figure of merit was requested for a cycle that is neither engine nor fridge."""


@dataclass(frozen=True)
class OttoCycleSpec:
    """Defaults: w_f = 2 w_i, beta_cold = 4 beta_hot with w_i*beta_hot = 1."""

    omega_i: float = 1.0
    omega_f: float = 2.0
    beta_cold: float = 4.0
    beta_hot: float = 1.0
    epsilon: float = 0.0

    def __post_init__(self):
        vals = (self.omega_i, self.omega_f, self.beta_cold, self.beta_hot, self.epsilon)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("cycle parameters must be finite")
        if not self.omega_f > self.omega_i > 0:
            raise ValueError(f"need omega_f > omega_i > 0, got {self.omega_f}, {self.omega_i}")
        if not self.beta_cold > self.beta_hot > 0:
            raise ValueError(
                f"need beta_cold > beta_hot > 0, got {self.beta_cold}, {self.beta_hot}"
            )
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")


@dataclass(frozen=True)
class OttoCycleResult:
    epsilon: float
    w1: float
    w3: float
    w_net: float
    q2: float
    q4: float
    regime: Regime
    figure_of_merit: Optional[float]


def hot_effective_beta(spec: OttoCycleSpec) -> float:
    return pt_mu(spec.epsilon) * spec.beta_hot


def _regime(w_net: float, q2: float, q4: float) -> Regime:
    if w_net < 0 and q2 > 0 and q4 < 0:
        return Regime.ENGINE
    if w_net > 0 and q2 < 0 and q4 > 0:
        return Regime.REFRIGERATOR
    return Regime.OTHER


def classify_regime(result: OttoCycleResult) -> Regime:
    """Engine: W<0, Q2>0, Q4<0. Refrigerator: all signs reversed. Anything
    else, including the all-zero boundary, is OTHER."""
    return _regime(result.w_net, result.q2, result.q4)


def _occupation(x: float) -> float:
    # e^-x / (1 - e^-x): underflows quietly to 0 in the zero-temperature limit
    return math.exp(-x) / -math.expm1(-x)


def stroke_energies(spec: OttoCycleSpec) -> OttoCycleResult:
    """Per-stroke work and heat.

    Stroke-endpoint states are thermal with sigma = (2n + 1) I, so
    hbar*w*tr(sigma)/4 = w (n + 1/2). Heat and net work are assembled from the
    occupation difference n_hot - n_cold directly; going through the traces
    would cancel the zero-point terms and lose every digit at low temperature.
    """
    wi, wf = spec.omega_i, spec.omega_f
    n_cold = _occupation(wi * spec.beta_cold)
    n_hot = _occupation(wf * hot_effective_beta(spec))
    gap = n_hot - n_cold

    w1 = (wf - wi) * (n_cold + 0.5)
    w3 = (wi - wf) * (n_hot + 0.5)
    q2 = wf * gap
    q4 = -wi * gap + 0.0  # no negative zero at the boundary
    w_net = -(wf - wi) * gap + 0.0
    regime = _regime(w_net, q2, q4)
    if regime is Regime.ENGINE:
        fom: Optional[float] = -w_net / q2
    elif regime is Regime.REFRIGERATOR:
        fom = q4 / w_net
    else:
        fom = None
    return OttoCycleResult(spec.epsilon, w1, w3, w_net, q2, q4, regime, fom)


def performance(result: OttoCycleResult, spec: OttoCycleSpec) -> float:
    """Efficiency (engine) or COP (refrigerator) from the cycle energies."""
    if result.regime is Regime.ENGINE:
        return -result.w_net / result.q2
    if result.regime is Regime.REFRIGERATOR:
        return result.q4 / result.w_net
    raise RegimeError(f"no figure of merit for regime {result.regime}")


def ideal_efficiency(spec: OttoCycleSpec) -> float:
    return 1.0 - spec.omega_i / spec.omega_f


def ideal_cop(spec: OttoCycleSpec) -> float:
    return spec.omega_i / (spec.omega_f - spec.omega_i)


def critical_epsilon(spec: OttoCycleSpec) -> Optional[float]:
    """Epsilon where the cycle switches from engine to refrigerator.

    Returns ``None`` when w_i*beta_cold < w_f*beta_hot: there is no engine
    window and the cycle refrigerates for every epsilon >= 0.
    """
    a = spec.omega_i * spec.beta_cold
    b = spec.omega_f * spec.beta_hot
    if a < b:
        return None
    return math.sqrt(a * a - b * b) / (2.0 * b)


def sweep_epsilon(spec_base: OttoCycleSpec, eps_grid: Sequence[float]) -> list[OttoCycleResult]:
    grid = [float(e) for e in eps_grid]
    if any(e < 0 for e in grid):
        raise ValueError("epsilon grid values must be >= 0")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("epsilon grid must be strictly increasing")
    return [stroke_energies(replace(spec_base, epsilon=e)) for e in grid]
