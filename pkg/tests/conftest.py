import mpmath
import numpy as np
import pytest
from hypothesis import strategies as st

from ptbath.gaussian import displace, squeeze, thermal_state

mpmath.mp.dps = 40

# Fig. 3 configuration: nbar = 2, (q0, p0) = (1, 1), beta*omega = 0.2, gamma = 0.1
FIG3_NBAR = 2.0
FIG3_EPSILONS = (0.0, 0.5, 1.0)


def mp_thermal_entropy(n):
    """(n+1) ln(n+1) - n ln n at 40 digits, independent of the package."""
    n = mpmath.mpf(n)
    if n == 0:
        return mpmath.mpf(0)
    return (n + 1) * mpmath.log(n + 1) - n * mpmath.log(n)


def mp_occupation(beta_omega, epsilon):
    mu = mpmath.sqrt(1 + 4 * mpmath.mpf(epsilon) ** 2)
    return 1 / (mpmath.exp(mpmath.mpf(beta_omega) * mu) - 1)


@pytest.fixture
def fig3_state():
    return displace(thermal_state(FIG3_NBAR), 1.0, 1.0)


@st.composite
def gaussian_states(draw, max_nbar=20.0, max_d=5.0, max_r=1.5):
    nbar = draw(st.floats(0.0, max_nbar))
    r = draw(st.floats(-max_r, max_r))
    q = draw(st.floats(-max_d / np.sqrt(2), max_d / np.sqrt(2)))
    p = draw(st.floats(-max_d / np.sqrt(2), max_d / np.sqrt(2)))
    return displace(squeeze(thermal_state(nbar), r), q, p)


def random_states(rng, n, max_nbar=20.0, max_d=5.0, max_r=1.5):
    """n states with |d| <= max_d, |r| <= max_r, nbar <= max_nbar."""
    out = []
    for _ in range(n):
        nbar = rng.uniform(0, max_nbar)
        r = rng.uniform(-max_r, max_r)
        rad = max_d * np.sqrt(rng.uniform())
        phi = rng.uniform(0, 2 * np.pi)
        out.append(displace(squeeze(thermal_state(nbar), r), rad * np.cos(phi), rad * np.sin(phi)))
    return out
