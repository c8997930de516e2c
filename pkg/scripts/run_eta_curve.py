#!/usr/bin/env python3
"""Critical shock size vs equity liquidation value eta for the ring and
complete networks at a fixed trigger ratio."""

import argparse
from pathlib import Path

from cocontagion.experiments import grid, run_eta_curve
from cocontagion.params import EconomyParams


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tau", type=float, default=0.008)
    parser.add_argument("--eta-max", type=float, default=0.95)
    parser.add_argument("--eta-step", type=float, default=0.01)
    parser.add_argument("--cap", type=float, default=100.0,
                        help="plotting cap; larger values get a capped flag")
    parser.add_argument("-o", "--outputs", type=Path, default=Path("results"))
    args = parser.parse_args()

    economy = EconomyParams(n=50, a=21, s=20, y=75)
    rows = run_eta_curve(
        economy, args.tau,
        eta_grid=grid(0.0, args.eta_max, args.eta_step),
        cap=args.cap,
        outputs=args.outputs,
    )
    print(f"wrote {args.outputs / 'eta_curve.csv'} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
