"""Single-mode Gaussian states in the (q, p) quadrature picture.

Covariance convention: sigma_ij = <R_i R_j + R_j R_i> - 2 <R_i><R_j>, so the
vacuum has sigma = I and a thermal state with mean occupation n has
sigma = (2n + 1) I. Units: hbar = k_B = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "InvalidStateError",
    "GaussianState",
    "thermal_state",
    "vacuum",
    "displace",
    "squeeze",
    "symplectic_eigenvalue",
    "entropy_from_nu",
    "thermal_entropy",
    "von_neumann_entropy",
    "reference_occupation",
    "coherence",
    "mean_energy",
]

SYMMETRY_TOL = 1e-12
# det(sigma) in [1 - PURITY_TOL, 1) is treated as floating-point drift and clamped to nu = 1
PURITY_TOL = 1e-9


class InvalidStateError(ValueError):
    """Raised when a covariance matrix violates the uncertainty principle."""


def _frozen(a, shape) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GaussianState:
    """First moments ``d = (<q>, <p>)`` and 2x2 covariance ``sigma``.

    Construction checks shape, finiteness and symmetry only. Physicality
    (det sigma >= 1) is checked by :meth:`is_physical` and enforced by the
    entropy-type functions, so unphysical matrices can still be represented
    and reported.
    """

    d: np.ndarray
    sigma: np.ndarray

    def __post_init__(self):
        d = _frozen(self.d, (2,))
        sigma = _frozen(self.sigma, (2, 2))
        if abs(sigma[0, 1] - sigma[1, 0]) > SYMMETRY_TOL:
            raise InvalidStateError("covariance matrix is not symmetric")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "sigma", sigma)

    def is_physical(self, tol: float = PURITY_TOL) -> bool:
        return bool(np.trace(self.sigma) > 0 and np.linalg.det(self.sigma) >= 1.0 - tol)

    def allclose(self, other: "GaussianState", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        return bool(
            np.allclose(self.d, other.d, rtol=rtol, atol=atol)
            and np.allclose(self.sigma, other.sigma, rtol=rtol, atol=atol)
        )

    def __repr__(self) -> str:
        return f"GaussianState(d={self.d.tolist()}, sigma={self.sigma.tolist()})"


def _check_nbar(nbar: float) -> float:
    nbar = float(nbar)
    if not (nbar >= 0.0) or not math.isfinite(nbar):
        raise ValueError(f"mean occupation must be finite and >= 0, got {nbar}")
    return nbar


def thermal_state(nbar: float) -> GaussianState:
    nbar = _check_nbar(nbar)
    return GaussianState(np.zeros(2), (2.0 * nbar + 1.0) * np.eye(2))


def vacuum() -> GaussianState:
    return thermal_state(0.0)


def displace(state: GaussianState, q0: float, p0: float) -> GaussianState:
    """Shift the first moments; the covariance is untouched."""
    return GaussianState(state.d + np.array([q0, p0], dtype=float), state.sigma)


def squeeze(state: GaussianState, r: float) -> GaussianState:
    """Apply the single-mode squeezer S = diag(e^-r, e^r)."""
    if not math.isfinite(r):
        raise ValueError("squeezing parameter must be finite")
    S = np.diag([math.exp(-r), math.exp(r)])
    sigma = S @ state.sigma @ S.T
    # keep exact symmetry after the product
    sigma = 0.5 * (sigma + sigma.T)
    return GaussianState(S @ state.d, sigma)


def symplectic_eigenvalue(state: GaussianState) -> float:
    det = float(np.linalg.det(state.sigma))
    if det < 1.0 - PURITY_TOL or np.trace(state.sigma) <= 0:
        raise InvalidStateError(f"det(sigma) = {det!r} violates the uncertainty principle")
    return math.sqrt(max(det, 1.0))


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0.0 else 0.0


def entropy_from_nu(nu: float) -> float:
    """Von Neumann entropy (nats) of a mode with symplectic eigenvalue ``nu``."""
    if nu < 1.0 - PURITY_TOL:
        raise InvalidStateError(f"symplectic eigenvalue {nu!r} < 1")
    nu = max(nu, 1.0)
    return _xlogx((nu + 1.0) / 2.0) - _xlogx((nu - 1.0) / 2.0)


def thermal_entropy(nbar: float) -> float:
    """(n+1) ln(n+1) - n ln n."""
    nbar = _check_nbar(nbar)
    return _xlogx(nbar + 1.0) - _xlogx(nbar)


def von_neumann_entropy(state: GaussianState) -> float:
    return entropy_from_nu(symplectic_eigenvalue(state))


def reference_occupation(state: GaussianState) -> float:
    """Occupation of the reference thermal state used by :func:`coherence`."""
    s = state.sigma
    d = state.d
    kbar = (s[0, 0] + s[1, 1] + d[0] ** 2 + d[1] ** 2 - 2.0) / 4.0
    # a physical state has trace(sigma) >= 2; round-off only
    return max(float(kbar), 0.0)


def coherence(state: GaussianState) -> float:
    """Relative-entropy coherence C = S(reference thermal) - S(state), in nats."""
    return thermal_entropy(reference_occupation(state)) - von_neumann_entropy(state)


def mean_energy(state: GaussianState, omega: float, covariance_only: bool = False) -> float:
    """Mean energy of ``omega (a^dag a + 1/2)`` in units of hbar*omega-unit.

    ``covariance_only=True`` drops the coherent (first-moment) contribution
    and returns ``omega * tr(sigma) / 4``, the quantity heat is built from.
    """
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    u = omega * float(np.trace(state.sigma)) / 4.0
    if not covariance_only:
        u += omega * float(state.d @ state.d) / 2.0
    return u
