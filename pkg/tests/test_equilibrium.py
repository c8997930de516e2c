import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cocontagion.equilibrium import (
    ConvergenceError,
    bank_income,
    distress,
    extent_of_contagion,
    fitness_map,
    fixed_points_from_starts,
    social_surplus,
    solve,
)
from cocontagion.networks import compensate, make_complete, make_random_regular, make_ring
from cocontagion.params import (
    EconomyParams,
    RegimeParams,
    ShockScenario,
    SolverSettings,
    single_shock,
)

ECONOMY = EconomyParams(n=50, a=21, s=20, y=75)
RING = make_ring(50, 75)
COMPLETE = make_complete(50, 75)


def z_for(net, eps=0.0, economy=ECONOMY):
    return compensate(net, economy.a).with_shock({0} if eps else set(), eps)


class TestBankIncome:
    def test_rest_income(self):
        h = bank_income(RING, z_for(RING), np.ones(50))
        assert h == pytest.approx(np.full(50, 96))

    def test_shock_enters_through_z_only(self):
        h = bank_income(RING, z_for(RING, eps=30), np.ones(50))
        assert h[0] == pytest.approx(96 - 30)
        assert h[1] == pytest.approx(96)

    def test_zero_fitness_recovers_z(self):
        z = z_for(RING)
        assert bank_income(RING, z, np.zeros(50)) == pytest.approx(z)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            bank_income(RING, np.ones(10), np.ones(50))


class TestFitnessMap:
    def test_rest_point_vanilla(self):
        phi = fitness_map(RING, z_for(RING), np.ones(50), s=20)
        assert phi == pytest.approx(np.ones(50))

    def test_eta_is_a_floor(self):
        phi = fitness_map(RING, z_for(RING, eps=500), np.zeros(50), s=20, eta=0.3)
        assert (phi >= 0.3).all()

    def test_rest_point_survives_small_tau(self):
        # no-trigger-at-rest: (1-tau)a - s = 0.832 >= tau*y = 0.6
        phi = fitness_map(COMPLETE, z_for(COMPLETE), np.ones(50), s=20, tau=0.008)
        assert phi == pytest.approx(np.ones(50))

    def test_zero_liability_bank_is_pinned(self):
        net = make_ring(3, 75)
        claims = net.claims.copy()
        claims[:, 0] = 0  # bank 0 owes nothing
        pruned = type(net)(claims, 75, "ring")
        phi = fitness_map(pruned, np.full(3, -100.0), np.ones(3), s=20)
        assert phi[0] == 1.0


class TestSolve:
    def test_ring_large_shock_closed_form(self):
        res = solve(RING, ECONOMY, single_shock(60))
        expected = np.minimum(1, np.arange(50) / 75)
        assert res.phi == pytest.approx(expected, abs=1e-9)
        assert res.extent == 1.0
        assert res.distress == pytest.approx(1 - 49 / 150, abs=1e-12)

    def test_complete_small_shock_closed_form(self):
        res = solve(COMPLETE, ECONOMY, single_shock(30))
        assert res.phi[0] == pytest.approx(1 - 29 / 75, abs=1e-9)
        assert res.phi[1:] == pytest.approx(np.ones(49))
        assert res.extent == pytest.approx(0.02)

    def test_no_shock_rest_point(self):
        for net in (RING, COMPLETE, make_random_regular(50, 10, 75, seed=3)):
            res = solve(net, ECONOMY, ShockScenario())
            assert res.phi == pytest.approx(np.ones(net.n))
            assert res.extent == 0.0 and res.distress == 0.0

    def test_result_metrics_consistent_with_phi(self):
        res = solve(RING, ECONOMY, single_shock(37.5))
        assert res.extent == extent_of_contagion(res.phi)
        assert res.distress == distress(res.phi)
        assert res.residual <= 1e-12

    def test_nonconvergence_carries_last_iterate(self):
        with pytest.raises(ConvergenceError) as exc:
            solve(RING, ECONOMY, single_shock(60), settings=SolverSettings(max_iter=3))
        assert exc.value.last_phi.shape == (50,)
        assert exc.value.iterations == 3

    def test_monotone_iterates_from_all_ones(self):
        z = z_for(RING, eps=60)
        phi = np.ones(50)
        for _ in range(200):
            nxt = fitness_map(RING, z, phi, s=20)
            assert (nxt <= phi + 1e-15).all()
            phi = nxt

    def test_eta_floor_on_equilibrium(self):
        res = solve(COMPLETE, ECONOMY, single_shock(80), RegimeParams(0.008, 0.3))
        assert res.phi.min() >= 0.3

    def test_vanilla_equals_tau_eta_zero_regime(self):
        a = solve(RING, ECONOMY, single_shock(42))
        b = solve(RING, ECONOMY, single_shock(42), RegimeParams(0.0, 0.0))
        assert np.array_equal(a.phi, b.phi)

    def test_ring_cascade_order(self):
        # along the debt direction, a whole bank implies the next one is whole
        for eps in (5.0, 25.0, 45.0):
            for regime in (RegimeParams(), RegimeParams(0.008, 0.0)):
                phi = solve(RING, ECONOMY, single_shock(eps), regime).phi
                for i in range(49):
                    if phi[i] >= 1 - 1e-9:
                        assert phi[i + 1] >= 1 - 1e-9

    def test_shock_monotonicity(self):
        for regime in (RegimeParams(), RegimeParams(0.008, 0.03)):
            prev_E, prev_D = -1.0, -1.0
            for eps in np.arange(0, 101, 10.0):
                res = solve(COMPLETE, ECONOMY, single_shock(float(eps)), regime)
                assert res.extent >= prev_E - 1e-12
                assert res.distress >= prev_D - 1e-9
                prev_E, prev_D = res.extent, res.distress


class TestStartPointRobustness:
    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10_000))
    def test_random_starts_agree(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 7))
        c = int(rng.integers(1, n - 1))
        net = make_random_regular(n, c, 75, seed=seed)
        economy = EconomyParams(n=n, a=21, s=20, y=75)
        eps = float(rng.uniform(0, 2 * n))
        regime = RegimeParams(tau=float(rng.uniform(0, 0.01)),
                              eta=float(rng.uniform(0, 0.5)))
        scenario = single_shock(eps, bank=int(rng.integers(n)))
        top = solve(net, economy, scenario, regime).phi
        starts = rng.uniform(0, 1, size=(100, n))
        fps = fixed_points_from_starts(net, economy, scenario, regime, starts)
        assert np.max(np.abs(fps - top)) < 1e-8


class TestMetrics:
    def test_extent_all_whole(self):
        assert extent_of_contagion(np.ones(50)) == 0.0

    def test_extent_one_distressed(self):
        phi = np.ones(50)
        phi[0] = 0.6133
        assert extent_of_contagion(phi) == pytest.approx(0.02)

    def test_extent_nobody_whole(self):
        assert extent_of_contagion(np.full(50, 0.5)) == 1.0

    def test_distress_bounds(self):
        assert distress(np.ones(50)) == 0.0
        assert distress(np.zeros(50)) == 1.0

    def test_distress_bounded_by_extent(self):
        for eps in (5.0, 30.0, 60.0):
            res = solve(RING, ECONOMY, single_shock(eps))
            assert res.distress <= res.extent + 50 * 1e-9


class TestSocialSurplus:
    def test_no_shock(self):
        economy = EconomyParams(n=50, a=21, s=20, y=75, A=5)
        res = solve(RING, economy, ShockScenario())
        assert social_surplus(RING, economy, ShockScenario(), res) == pytest.approx(50 * 26)

    def test_ring_large_shock_zero_project(self):
        res = solve(RING, ECONOMY, single_shock(60))
        u = social_surplus(RING, ECONOMY, single_shock(60), res)
        assert u == pytest.approx(50 * 21 - 60)

    def test_one_default_liquidates_once(self):
        economy = EconomyParams(n=50, a=21, s=20, y=75, A=5)
        res = solve(COMPLETE, economy, single_shock(30))
        u = social_surplus(COMPLETE, economy, single_shock(30), res)
        assert u == pytest.approx(50 * 26 - 30 - 5)

    def test_legacy_n_scaled_variant(self):
        economy = EconomyParams(n=50, a=21, s=20, y=75, A=5)
        res = solve(COMPLETE, economy, single_shock(30))
        u = social_surplus(COMPLETE, economy, single_shock(30), res,
                           defaults_scaled_by_n=True)
        assert u == pytest.approx(50 * 26 - 30 - 50 * 5 * 1)
