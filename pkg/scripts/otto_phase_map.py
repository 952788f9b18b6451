#!/usr/bin/env python3
"""Critical epsilon across compression ratios and bath-temperature ratios."""

import argparse

import numpy as np

from ptbath.otto import OttoCycleSpec, critical_epsilon, stroke_energies


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ratios", type=float, nargs="+", default=[1.5, 2.0, 3.0])
    ap.add_argument("--temp-ratios", type=float, nargs="+", default=[2.0, 4.0, 8.0])
    args = ap.parse_args()

    print(f"{'w_f/w_i':>8} {'bc/bh':>6} {'eps_c':>10} {'W(eps=0)':>12}")
    for r in args.ratios:
        for tr in args.temp_ratios:
            spec = OttoCycleSpec(1.0, r, tr, 1.0)
            ec = critical_epsilon(spec)
            w0 = stroke_energies(spec).w_net
            ec_s = "none" if ec is None else f"{ec:.6f}"
            print(f"{r:8.2f} {tr:6.2f} {ec_s:>10} {w0:12.6f}")


if __name__ == "__main__":
    main()
