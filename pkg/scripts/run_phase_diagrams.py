#!/usr/bin/env python3
"""Safe-region rasters of the (exposure, shock) plane for the ring and
complete networks, one CSV per trigger ratio tau."""

import argparse
from pathlib import Path

from cocontagion.experiments import grid, run_phase_diagram
from cocontagion.params import EconomyParams


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tau", type=float, nargs="+", default=[0.004, 0.008, 0.02],
                        help="trigger ratios, one raster each")
    parser.add_argument("-o", "--outputs", type=Path, default=Path("results"))
    parser.add_argument("--y-max", type=float, default=100.0)
    parser.add_argument("--eps-max", type=float, default=100.0)
    parser.add_argument("--step", type=float, default=0.5)
    args = parser.parse_args()

    economy = EconomyParams(n=50, a=21, s=20, y=75)
    run_phase_diagram(
        economy,
        args.tau,
        y_grid=grid(args.step, args.y_max, args.step),
        eps_grid=grid(0.0, args.eps_max, args.step),
        outputs=args.outputs,
    )
    for tau in args.tau:
        print(f"wrote {args.outputs / f'phase_tau{tau:g}.csv'}")


if __name__ == "__main__":
    main()
