"""Thermalization and Otto cycles with a PT-symmetric thermal reservoir."""

from .gaussian import (
    GaussianState,
    InvalidStateError,
    coherence,
    displace,
    mean_energy,
    reference_occupation,
    squeeze,
    symplectic_eigenvalue,
    thermal_state,
    von_neumann_entropy,
)
from .reservoir import PTReservoirSpec, ancilla_state, effective_beta, reservoir_occupation
from .thermalization import (
    ThermalizationTrajectory,
    entropy_production,
    evolve,
    heat_exchanged,
    run_trajectory,
)
from .collision import CollisionConfig, collide_once, simulate
from .otto import (
    OttoCycleResult,
    OttoCycleSpec,
    Regime,
    classify_regime,
    critical_epsilon,
    performance,
    stroke_energies,
    sweep_epsilon,
)

__version__ = "0.1.0"
