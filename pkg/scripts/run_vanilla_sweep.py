#!/usr/bin/env python3
"""Shock sweep without conversion or liquidation (the baseline phase
transition): extent and distress vs shock size for ring, complete and
random regular topologies at n=50, a=21, s=20, y=75."""

import argparse
from pathlib import Path

from cocontagion.experiments import reference_sweep_config, run_shock_sweep
from cocontagion.params import RegimeParams


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--outputs", type=Path, default=Path("results"),
                        help="directory for the sweep CSV (default: results/)")
    parser.add_argument("--seed", type=int, default=0, help="master seed")
    parser.add_argument("--realizations", type=int, default=10)
    args = parser.parse_args()

    config = reference_sweep_config(
        RegimeParams(),
        realizations=args.realizations,
        master_seed=args.seed,
        outputs=args.outputs,
    )
    rows = run_shock_sweep(config)
    print(f"wrote {args.outputs / 'sweep_vanilla.csv'} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
