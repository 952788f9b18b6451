#!/usr/bin/env python3
"""Error of the collisional model against the closed form as dt shrinks."""

import numpy as np

from ptbath.collision import (
    CollisionConfig,
    exact_angle,
    max_covariance_error,
    naive_angle,
    simulate,
)
from ptbath.gaussian import displace, thermal_state
from ptbath.reservoir import PTReservoirSpec


def main():
    s0 = displace(thermal_state(2.0), 1.0, 1.0)
    spec = PTReservoirSpec(0.2, 1.0, 0.5, 0.1)
    t_total = 100.0
    print(f"{'gamma dt':>9} {'exact rule':>12} {'naive rule':>12}")
    prev = None
    for k in range(6):
        dt = 1.0 / 2**k
        n = int(round(t_total / dt))
        errs = []
        for rule in (exact_angle, naive_angle):
            tr = simulate(s0, spec, CollisionConfig(dt, n, rule))
            errs.append(max_covariance_error(tr, s0, spec)[0].max())
        ratio = "" if prev is None else f"  x{prev / errs[1]:.3f}"
        print(f"{spec.gamma * dt:9.5f} {errs[0]:12.3e} {errs[1]:12.3e}{ratio}")
        prev = errs[1]


if __name__ == "__main__":
    main()
