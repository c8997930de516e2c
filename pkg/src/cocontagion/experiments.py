"""Seeded experiment drivers: shock sweeps, safe-region phase diagrams
and critical-shock curves, persisted as schema-tagged CSV files.

All drivers are deterministic for a fixed master seed: realization r of
the connectivity-c topology draws its RNG seed from
numpy.random.SeedSequence([master_seed, c, r]), a pure function, so
sweep cells can be computed in any order without changing results.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .analytics import coco_thresholds, critical_shock_liq
from .equilibrium import ConvergenceError, solve
from .networks import InterbankNetwork, make_complete, make_random_regular, make_ring
from .params import EconomyParams, RegimeParams, SolverSettings, single_shock

SWEEP_SCHEMA = "sweep-v1"
PHASE_SCHEMA = "phase-v1"
ETA_SCHEMA = "eta-curve-v1"

DEFAULT_EPS_MIN = 0.0
DEFAULT_EPS_MAX = 100.0
DEFAULT_EPS_STEP = 0.5


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    economy: EconomyParams
    regime: RegimeParams
    topologies: tuple[str, ...]
    eps_min: float = DEFAULT_EPS_MIN
    eps_max: float = DEFAULT_EPS_MAX
    eps_step: float = DEFAULT_EPS_STEP
    realizations: int = 10
    master_seed: int = 0
    outputs: Path | None = None

    def __post_init__(self):
        if self.eps_step <= 0 or self.eps_max < self.eps_min:
            raise ConfigError("eps grid must be nonempty and increasing")
        if self.realizations < 1:
            raise ConfigError("realizations must be >= 1")
        if not self.topologies:
            raise ConfigError("at least one topology is required")
        for t in self.topologies:
            parse_topology(t, self.economy.n)


class SweepRow(NamedTuple):
    topology: str
    c: int
    eps: float
    mean_E: float
    std_E: float
    mean_D: float
    std_D: float
    realizations: int


def reference_sweep_config(regime: RegimeParams = RegimeParams(), **overrides) -> SweepConfig:
    """Reference parameterization: n=50, a=21, s=20, y=75,
    connectivities 2, 3, 10, 20, 30, 40, 10 realizations each."""
    cfg = SweepConfig(
        economy=EconomyParams(n=50, a=21, s=20, y=75),
        regime=regime,
        topologies=(
            "ring",
            "regular:2", "regular:3", "regular:10",
            "regular:20", "regular:30", "regular:40",
            "complete",
        ),
    )
    return replace(cfg, **overrides) if overrides else cfg


def grid(lo: float, hi: float, step: float) -> np.ndarray:
    """Inclusive arithmetic grid lo, lo+step, ..., <= hi (within 1e-9)."""
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def parse_topology(spec: str, n: int) -> tuple[str, int]:
    """Normalize a topology spec to (kind, c). Ring has connectivity 1,
    complete n-1; `regular:c` (or `regular(c)`) an explicit c."""
    if spec == "ring":
        return "ring", 1
    if spec == "complete":
        return "complete", n - 1
    m = re.fullmatch(r"regular[:(](\d+)\)?", spec)
    if m:
        c = int(m.group(1))
        if not 2 <= c <= n - 2:
            raise ConfigError(f"regular connectivity must be in [2, n-2], got {c}")
        return "regular", c
    raise ConfigError(f"unknown topology spec {spec!r}")


def realization_seed(master_seed: int, c: int, r: int) -> int:
    """Pure seed derivation for realization r of the connectivity-c family."""
    return int(np.random.SeedSequence([master_seed, c, r]).generate_state(1)[0])


def build_network(kind: str, c: int, n: int, y: float, seed: int | None) -> InterbankNetwork:
    if kind == "ring":
        return make_ring(n, y)
    if kind == "complete":
        return make_complete(n, y)
    return make_random_regular(n, c, y, seed)


def regime_tag(regime: RegimeParams) -> str:
    if regime.is_vanilla:
        return "vanilla"
    return f"tau{regime.tau:g}_eta{regime.eta:g}"


def run_shock_sweep(
    config: SweepConfig, settings: SolverSettings = SolverSettings()
) -> list[SweepRow]:
    """Solve every topology x eps cell (fresh seeded network sample per
    realization for the random regular families, single shock on bank 1)
    and average extent and distress over realizations.

    Cells whose solver does not converge are dropped from the average;
    the realizations column reports the surviving count (0 means the
    whole cell failed and its means are NaN)."""
    rows = []
    eps_values = grid(config.eps_min, config.eps_max, config.eps_step)
    for spec in config.topologies:
        kind, c = parse_topology(spec, config.economy.n)
        n, y = config.economy.n, config.economy.y
        if kind == "regular":
            networks = [
                build_network(kind, c, n, y,
                              realization_seed(config.master_seed, c, r))
                for r in range(config.realizations)
            ]
        else:
            networks = [build_network(kind, c, n, y, None)]
        for eps in eps_values:
            E, D = [], []
            for net in networks:
                try:
                    res = solve(net, config.economy, single_shock(eps),
                                config.regime, settings)
                except ConvergenceError:
                    continue
                E.append(res.extent)
                D.append(res.distress)
            ok = len(E)
            rows.append(SweepRow(
                topology=kind,
                c=c,
                eps=float(eps),
                mean_E=float(np.mean(E)) if ok else float("nan"),
                std_E=float(np.std(E)) if ok else float("nan"),
                mean_D=float(np.mean(D)) if ok else float("nan"),
                std_D=float(np.std(D)) if ok else float("nan"),
                realizations=ok,
            ))
    if config.outputs is not None:
        path = Path(config.outputs) / f"sweep_{regime_tag(config.regime)}.csv"
        write_sweep_csv(rows, path)
    return rows


class PhaseRow(NamedTuple):
    y: float
    eps: float
    ring_safe: int
    complete_safe: int


def run_phase_diagram(
    economy: EconomyParams,
    tau_list,
    y_grid,
    eps_grid,
    outputs: Path | None = None,
) -> dict[float, list[PhaseRow]]:
    """Rasterize safe/unsafe membership of the (y, eps) plane for the
    ring and complete networks, one raster per tau, via the analytic
    stability regions."""
    rasters = {}
    for tau in tau_list:
        ring = coco_thresholds(economy.n, economy.a, economy.s, tau, "ring")
        comp = coco_thresholds(economy.n, economy.a, economy.s, tau, "complete")
        rows = [
            PhaseRow(float(y), float(eps),
                     int(ring.is_safe(y, eps)), int(comp.is_safe(y, eps)))
            for y in y_grid
            for eps in eps_grid
        ]
        rasters[tau] = rows
        if outputs is not None:
            write_phase_csv(rows, Path(outputs) / f"phase_tau{tau:g}.csv")
    return rasters


class EtaRow(NamedTuple):
    eta: float
    eps_star_ring: float
    eps_star_complete: float
    capped_ring: int
    capped_complete: int


def run_eta_curve(
    economy: EconomyParams,
    tau: float,
    eta_grid,
    cap: float = 100.0,
    outputs: Path | None = None,
) -> list[EtaRow]:
    """Critical shock vs equity liquidation value eta, for ring and
    complete networks. Values are reported raw; the capped flags mark
    points beyond the plotting cap."""
    rows = []
    for eta in eta_grid:
        er = critical_shock_liq(economy.n, economy.a, economy.s, economy.y,
                                tau, eta, "ring")
        ec = critical_shock_liq(economy.n, economy.a, economy.s, economy.y,
                                tau, eta, "complete")
        rows.append(EtaRow(float(eta), er, ec, int(er > cap), int(ec > cap)))
    if outputs is not None:
        write_eta_csv(rows, Path(outputs) / "eta_curve.csv")
    return rows


# --- CSV persistence (full precision, schema-tagged, deterministic) ---

def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _write_csv(path: Path, schema: str, header: str, rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# schema={schema}", header]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def write_sweep_csv(rows, path) -> None:
    _write_csv(Path(path), SWEEP_SCHEMA,
               "topology,c,eps,mean_E,std_E,mean_D,std_D,realizations", rows)


def write_phase_csv(rows, path) -> None:
    _write_csv(Path(path), PHASE_SCHEMA, "y,eps,ring_safe,complete_safe", rows)


def write_eta_csv(rows, path) -> None:
    _write_csv(Path(path), ETA_SCHEMA,
               "eta,eps_star_ring,eps_star_complete,capped_ring,capped_complete",
               rows)


# --- flat key = value config files ---

_CONFIG_TYPES = {
    "n": int,
    "a": float,
    "s": float,
    "y": float,
    "A": float,
    "zeta": float,
    "tau": float,
    "eta": float,
    "topologies": str,
    "eps_min": float,
    "eps_max": float,
    "eps_step": float,
    "realizations": int,
    "master_seed": int,
    "outputs": str,
    "tau_list": str,
    "y_min": float,
    "y_max": float,
    "y_step": float,
    "eta_min": float,
    "eta_max": float,
    "eta_step": float,
    "cap": float,
}


def parse_config(path) -> dict:
    """Flat `key = value` file, '#' comments; unknown keys are errors."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _CONFIG_TYPES:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = _CONFIG_TYPES[key](val)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {val!r}") from exc
    return values


def _economy_from(values: dict) -> EconomyParams:
    try:
        return EconomyParams(
            n=values["n"], a=values["a"], s=values["s"], y=values["y"],
            A=values.get("A", 0.0), zeta=values.get("zeta", 0.0),
        )
    except KeyError as exc:
        raise ConfigError(f"missing economy key {exc.args[0]!r}") from exc


def sweep_config_from_file(path, seed_override: int | None = None) -> SweepConfig:
    values = parse_config(path)
    economy = _economy_from(values)
    regime = RegimeParams(values.get("tau", 0.0), values.get("eta", 0.0))
    topologies = tuple(
        t.strip() for t in values.get("topologies", "ring,complete").split(",") if t.strip()
    )
    return SweepConfig(
        economy=economy,
        regime=regime,
        topologies=topologies,
        eps_min=values.get("eps_min", DEFAULT_EPS_MIN),
        eps_max=values.get("eps_max", DEFAULT_EPS_MAX),
        eps_step=values.get("eps_step", DEFAULT_EPS_STEP),
        realizations=values.get("realizations", 10),
        master_seed=seed_override if seed_override is not None
        else values.get("master_seed", 0),
        outputs=Path(values["outputs"]) if "outputs" in values else None,
    )


def phase_args_from_file(path) -> dict:
    values = parse_config(path)
    economy = _economy_from(values)
    tau_list = [float(t) for t in values.get("tau_list", "0.008").split(",")]
    return {
        "economy": economy,
        "tau_list": tau_list,
        "y_grid": grid(values.get("y_min", 1.0), values.get("y_max", 100.0),
                       values.get("y_step", 1.0)),
        "eps_grid": grid(values.get("eps_min", DEFAULT_EPS_MIN),
                         values.get("eps_max", DEFAULT_EPS_MAX),
                         values.get("eps_step", DEFAULT_EPS_STEP)),
        "outputs": Path(values["outputs"]) if "outputs" in values else None,
    }


def eta_args_from_file(path) -> dict:
    values = parse_config(path)
    economy = _economy_from(values)
    return {
        "economy": economy,
        "tau": values.get("tau", 0.008),
        "eta_grid": grid(values.get("eta_min", 0.0), values.get("eta_max", 0.95),
                         values.get("eta_step", 0.05)),
        "cap": values.get("cap", 100.0),
        "outputs": Path(values["outputs"]) if "outputs" in values else None,
    }
