#!/usr/bin/env python3
"""Heat, coherence and entropy production at a few times for several epsilons.

    python scripts/thermalization_table.py --eps 0 0.5 1 --gamma-t 0.5 1 2 5 20
"""

import argparse

from ptbath.gaussian import displace, thermal_state
from ptbath.reservoir import PTReservoirSpec
from ptbath.thermalization import run_trajectory


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eps", type=float, nargs="+", default=[0.0, 0.5, 1.0])
    ap.add_argument("--gamma-t", type=float, nargs="+", default=[0.5, 1.0, 2.0, 5.0, 20.0])
    ap.add_argument("--beta", type=float, default=0.2)
    ap.add_argument("--gamma", type=float, default=0.1)
    ap.add_argument("--bare-beta", action="store_true", help="entropy production against bare beta")
    args = ap.parse_args()

    s0 = displace(thermal_state(2.0), 1.0, 1.0)
    print(f"{'eps':>5} {'gamma t':>8} {'heat':>12} {'coherence':>12} {'Sigma':>12}")
    for eps in args.eps:
        spec = PTReservoirSpec(args.beta, 1.0, eps, args.gamma)
        for gt in args.gamma_t:
            tr = run_trajectory(s0, spec, gt / args.gamma, 2, bare_beta=args.bare_beta)
            print(f"{eps:5.2f} {gt:8.2f} {tr.heat[-1]:12.6f} {tr.coherence[-1]:12.6f} "
                  f"{tr.entropy_production[-1]:12.6f}")
        print(f"      N = {spec.occupation:.6f}, beta_eff = {spec.effective_beta:.6f}")


if __name__ == "__main__":
    main()
