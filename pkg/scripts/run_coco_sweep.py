#!/usr/bin/env python3
"""Shock sweep with a conversion trigger (and optionally equity
liquidation): extent and distress vs shock size per topology."""

import argparse
from pathlib import Path

from cocontagion.experiments import reference_sweep_config, regime_tag, run_shock_sweep
from cocontagion.params import RegimeParams


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tau", type=float, default=0.008,
                        help="trigger capital ratio (default 0.008)")
    parser.add_argument("--eta", type=float, default=0.0,
                        help="equity liquidation value (default 0)")
    parser.add_argument("-o", "--outputs", type=Path, default=Path("results"))
    parser.add_argument("--seed", type=int, default=0, help="master seed")
    parser.add_argument("--realizations", type=int, default=10)
    args = parser.parse_args()

    regime = RegimeParams(args.tau, args.eta)
    config = reference_sweep_config(
        regime,
        realizations=args.realizations,
        master_seed=args.seed,
        outputs=args.outputs,
    )
    rows = run_shock_sweep(config)
    print(f"wrote {args.outputs / f'sweep_{regime_tag(regime)}.csv'} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
