"""Acceptance suite: one test per headline criterion, each printing a
single PASS/FAIL line (run with -s or look at captured output)."""

import numpy as np
import pytest

from cocontagion.analytics import (
    complete_closed_form_vanilla,
    coco_thresholds,
    critical_shock_liq,
    ring_closed_form_vanilla,
)
from cocontagion.equilibrium import fitness_map, fixed_points_from_starts, solve
from cocontagion.experiments import (
    SweepConfig,
    grid,
    reference_sweep_config,
    run_shock_sweep,
)
from cocontagion.networks import compensate, make_complete, make_random_regular, make_ring
from cocontagion.params import EconomyParams, RegimeParams, single_shock

ECONOMY = EconomyParams(n=50, a=21, s=20, y=75)
GRID_STEP = 0.5


def _report(name: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, name


def _sweep_by_topology(regime=RegimeParams(), **overrides):
    rows = run_shock_sweep(reference_sweep_config(regime, **overrides))
    out = {}
    for r in rows:
        out.setdefault((r.topology, r.c), []).append(r)
    return out


class TestAcceptance:
    def test_1_vanilla_phase_transition(self):
        """Complete network: E jumps from 0.02 to 1 at eps* = 50; ring is
        stepwise, systemic by 50.5."""
        by_topo = _sweep_by_topology(topologies=("ring", "complete"))
        ok = True
        comp = by_topo[("complete", 49)]
        for r in comp:
            if 1 < r.eps < 50:
                ok &= r.mean_E == pytest.approx(0.02)
            elif r.eps > 50.4:
                ok &= r.mean_E == 1.0
        ring = by_topo[("ring", 1)]
        extents = [r.mean_E for r in ring]
        ok &= all(b >= a - 1e-12 for a, b in zip(extents, extents[1:]))
        ring_onset = min(r.eps for r in ring if r.mean_E == 1.0)
        ok &= ring_onset <= 50.5
        comp_onset = min(r.eps for r in comp if r.mean_E == 1.0)
        ok &= abs(comp_onset - 50.0) <= GRID_STEP
        _report("criterion 1: vanilla phase transition at eps* = 50", ok)

    def test_2_closed_form_oracle_equivalence(self):
        """Simulated ring/complete equilibria match the closed forms to
        max-norm 1e-9 across all branches."""
        points = [(eps, y)
                  for eps in (1.5, 5.0, 20.0, 40.0, 49.5, 50.5, 60.0, 80.0, 99.0, 120.0)
                  for y in (30.0, 75.0)]
        assert len(points) == 20
        ok = True
        for eps, y in points:
            economy = EconomyParams(n=50, a=21, s=20, y=y)
            sim_r = solve(make_ring(50, y), economy, single_shock(eps))
            ana_r = ring_closed_form_vanilla(50, 21, 20, y, eps)
            ok &= float(np.max(np.abs(sim_r.phi - ana_r.phi))) <= 1e-9
            sim_c = solve(make_complete(50, y), economy, single_shock(eps))
            ana_c = complete_closed_form_vanilla(50, 21, 20, y, eps)
            ok &= float(np.max(np.abs(sim_c.phi - ana_c.phi_vector(50)))) <= 1e-9
        big = solve(make_ring(50, 75), ECONOMY, single_shock(60))
        ok &= big.distress == pytest.approx(1 - 49 / 150, abs=1e-12)
        _report("criterion 2: closed-form oracle equivalence (20 points, 1e-9)", ok)

    def test_3_trigger_onsets_bracket_analytics(self):
        """Simulated systemic-trigger onsets bracket the analytic shock
        thresholds within one grid step; complete <= ring at each tau.
        Negative analytic thresholds are clamped at 0 (any shock systemic)."""
        ok = True
        eps_values = grid(0.0, 100.0, GRID_STEP)
        for tau in (0.004, 0.008, 0.02):
            regime = RegimeParams(tau, 0.0)
            onsets = {}
            for topo, make in (("ring", make_ring), ("complete", make_complete)):
                net = make(50, 75)
                onset = None
                for eps in eps_values:
                    res = solve(net, ECONOMY, single_shock(float(eps)), regime)
                    if res.extent == 1.0:
                        onset = float(eps)
                        break
                region = coco_thresholds(50, 21, 20, tau, topo)
                analytic = max(float(region.eps_star_of_y(75.0)), 0.0)
                ok &= onset is not None and abs(onset - analytic) <= GRID_STEP + 1e-9
                onsets[topo] = analytic
            ok &= onsets["complete"] <= onsets["ring"] + 1e-9
        _report("criterion 3: trigger onsets bracket analytic thresholds", ok)

    def test_4_liquidation_critical_shock_limits(self):
        """Critical-shock curve: exact vanilla limit, ring explosion and
        modest complete growth at (0.008, 0.1), monotone in eta."""
        ok = critical_shock_liq(50, 21, 20, 75, 0.0, 0.0, "ring") == pytest.approx(50)
        ok &= critical_shock_liq(50, 21, 20, 75, 0.0, 0.0, "complete") == pytest.approx(50)
        ok &= critical_shock_liq(50, 21, 20, 75, 0.008, 0.1, "ring") > 100
        ok &= critical_shock_liq(50, 21, 20, 75, 0.008, 0.1, "complete") < 20
        for topo in ("ring", "complete"):
            vals = [critical_shock_liq(50, 21, 20, 75, 0.008, eta, topo)
                    for eta in np.linspace(0.0, 0.95, 20)]
            ok &= all(b >= a for a, b in zip(vals, vals[1:]))
        _report("criterion 4: liquidation critical-shock limits and monotonicity", ok)

    def test_5_floor_monotonicity_uniqueness(self):
        """200 randomized small instances: min phi >= eta, nonincreasing
        iterates from all-ones, 100 random starts agree within 1e-8."""
        rng = np.random.default_rng(20240817)
        ok = True
        for _ in range(200):
            n = int(rng.integers(3, 9))
            c = int(rng.integers(1, n - 1))
            net = make_random_regular(n, c, 75, seed=int(rng.integers(1 << 31)))
            economy = EconomyParams(n=n, a=21, s=20, y=75)
            regime = RegimeParams(tau=float(rng.uniform(0, 0.01)),
                                  eta=float(rng.uniform(0, 0.6)))
            scenario = single_shock(float(rng.uniform(0, 3 * n)),
                                    bank=int(rng.integers(n)))
            res = solve(net, economy, scenario, regime)
            ok &= float(res.phi.min()) >= regime.eta - 1e-15
            z = compensate(net, 21).with_shock(scenario.shocked, scenario.epsilon)
            phi = np.ones(n)
            for _ in range(50):
                nxt = fitness_map(net, z, phi, s=20, tau=regime.tau, eta=regime.eta)
                ok &= bool((nxt <= phi + 1e-15).all())
                phi = nxt
            starts = rng.uniform(0, 1, size=(100, n))
            fps = fixed_points_from_starts(net, economy, scenario, regime, starts)
            ok &= float(np.max(np.abs(fps - res.phi))) < 1e-8
        _report("criterion 5: floor, monotone iterates, unique fixed point (200 instances)", ok)

    def test_6_mixed_regime_qualitative_shape(self):
        """tau=0.008, eta=0.3: ring plateaus below 0.25, sparse random
        families below 0.7, complete systemic by eps = 20."""
        by_topo = _sweep_by_topology(RegimeParams(0.008, 0.3))
        ring_max = max(r.mean_E for r in by_topo[("ring", 1)])
        sparse_max = {c: max(r.mean_E for r in by_topo[("regular", c)])
                      for c in (2, 3)}
        comp_onset = min(r.eps for r in by_topo[("complete", 49)] if r.mean_E == 1.0)
        ok = (ring_max < 0.25
              and all(v < 0.7 for v in sparse_max.values())
              and comp_onset <= 20.0)
        print(f"  observed: ring max E = {ring_max:.3g} (bound 0.25), "
              f"c=2 max E = {sparse_max[2]:.3g}, c=3 max E = {sparse_max[3]:.3g} "
              f"(bound 0.7), complete onset eps = {comp_onset:g} (bound 20)")
        _report("criterion 6: conversion+liquidation sweep qualitative shape", ok)

    def test_7_sweep_determinism(self, tmp_path):
        """Both headline sweeps are byte-identical across repeated runs
        with the same master seed."""
        ok = True
        for name, regime in (("vanilla", RegimeParams()),
                             ("tau0.008_eta0.3", RegimeParams(0.008, 0.3))):
            blobs = []
            for sub in ("a", "b"):
                out = tmp_path / name / sub
                run_shock_sweep(reference_sweep_config(
                    regime, eps_step=2.0, realizations=3, outputs=out))
                blobs.append((out / f"sweep_{name}.csv").read_bytes())
            ok &= blobs[0] == blobs[1]
        _report("criterion 7: byte-identical sweep CSVs for a fixed master seed", ok)
