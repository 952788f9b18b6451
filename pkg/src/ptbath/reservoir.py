"""Thermal reservoir built from ancillas with a PT-symmetric Hamiltonian.

The ancilla Hamiltonian p^2/2m + m w^2 q^2/2 + 2 i w eps p q is mapped by the
Dyson map exp(eps p^2 / (m w hbar)) to a Hermitian oscillator whose kinetic
term is rescaled by mu^2 = 1 + 4 eps^2, plus a constant shift w*eps. Its
thermal state at inverse temperature beta therefore looks like an ordinary
bath at beta_eff = mu * beta.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .gaussian import GaussianState, thermal_state

__all__ = [
    "OccupationUnderflowWarning",
    "PTReservoirSpec",
    "pt_mu",
    "mu",
    "effective_beta",
    "bose_occupation",
    "reservoir_occupation",
    "ancilla_state",
    "hermitized_energy_shift",
]

# beyond this exponent exp(-x) is below ~1e-304 and N is reported as 0
UNDERFLOW_EXPONENT = 700.0


class OccupationUnderflowWarning(RuntimeWarning):
    """beta*omega*mu is so large that the occupation underflows to zero."""


@dataclass(frozen=True)
class PTReservoirSpec:
    """Reservoir parameters. Defaults reproduce the thermalization figure
    (beta*omega = 0.2, gamma = 0.1, Hermitian limit)."""

    beta: float = 0.2
    omega: float = 1.0
    epsilon: float = 0.0
    gamma: float = 0.1

    def __post_init__(self):
        for name in ("beta", "omega", "gamma"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if not (math.isfinite(self.epsilon) and self.epsilon >= 0):
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")

    @property
    def mu(self) -> float:
        return mu(self)

    @property
    def effective_beta(self) -> float:
        return effective_beta(self)

    @property
    def occupation(self) -> float:
        return reservoir_occupation(self)


def pt_mu(epsilon: float) -> float:
    """sqrt(1 + 4 eps^2)."""
    return math.sqrt(1.0 + 4.0 * epsilon * epsilon)


def mu(spec: PTReservoirSpec) -> float:
    return pt_mu(spec.epsilon)


def effective_beta(spec: PTReservoirSpec) -> float:
    return pt_mu(spec.epsilon) * spec.beta


def bose_occupation(x: float) -> float:
    """1 / (e^x - 1) for x = beta*omega > 0, evaluated without cancellation."""
    if not x > 0:
        raise ValueError(f"beta*omega must be positive, got {x}")
    if x > UNDERFLOW_EXPONENT:
        warnings.warn(
            f"occupation underflows for beta*omega*mu = {x:g}; returning 0",
            OccupationUnderflowWarning,
            stacklevel=2,
        )
        return 0.0
    return 1.0 / math.expm1(x)


def reservoir_occupation(spec: PTReservoirSpec) -> float:
    return bose_occupation(spec.beta * spec.omega * pt_mu(spec.epsilon))


def ancilla_state(spec: PTReservoirSpec) -> GaussianState:
    """Thermal state of every ancilla; also the asymptotic system state."""
    return thermal_state(reservoir_occupation(spec))


def hermitized_energy_shift(spec: PTReservoirSpec) -> float:
    # state-independent; drops out of every heat and work difference
    return spec.omega * spec.epsilon
