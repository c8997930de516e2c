"""Fixed point of the fitness-propagation map and contagion metrics.

The equilibrium map is

    phi_i  ->  eta + (1 - eta) * f_{y_i,s}((1 - tau) * h_i(phi)),

with f_{y,s}(h) = min(1, (h - s)/y)^+ and bank income
h_i(phi) = z_i + sum_k claims[i, k] * phi_k. Iterated from the all-ones
vector the map is monotone nonincreasing, so the iteration converges to
the greatest fixed point, which we take as the model's equilibrium.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import liquidation_decision
from .networks import InterbankNetwork, compensate
from .params import EconomyParams, RegimeParams, ShockScenario, SolverSettings, VANILLA

DEFAULT_SETTINGS = SolverSettings()


class ConvergenceError(RuntimeError):
    """Raised when the iteration cap is exceeded; carries the last iterate."""

    def __init__(self, message: str, last_phi: np.ndarray, iterations: int, residual: float):
        super().__init__(message)
        self.last_phi = last_phi
        self.iterations = iterations
        self.residual = residual


@dataclass(frozen=True)
class EquilibriumResult:
    phi: np.ndarray
    iterations: int
    residual: float
    extent: float
    distress: float


def bank_income(network: InterbankNetwork, z: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """h_i = z_i + sum_k claims[i, k] * phi_k (works on batches of phi:
    the trailing axis of phi indexes banks)."""
    z = np.asarray(z, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if z.shape[-1] != network.n or phi.shape[-1] != network.n:
        raise ValueError("dimension mismatch between network, z and phi")
    return z + phi @ network.claims.T


def fitness_map(
    network: InterbankNetwork,
    z: np.ndarray,
    phi: np.ndarray,
    s: float,
    tau: float = 0.0,
    eta: float = 0.0,
) -> np.ndarray:
    """One application of the equilibrium map. Banks whose realized
    liability is zero are pinned to phi = 1 (nothing to default on)."""
    h = bank_income(network, z, phi)
    y_i = network.liability
    with np.errstate(divide="ignore", invalid="ignore"):
        f = np.clip(((1 - tau) * h - s) / y_i, 0.0, 1.0)
    f = np.where(y_i > 0, f, 1.0)
    return eta + (1 - eta) * f


def _iterate(network, z, s, tau, eta, phi0, settings, n_cap):
    phi = np.array(phi0, dtype=float)
    residual = np.inf
    for it in range(1, n_cap + 1):
        nxt = fitness_map(network, z, phi, s, tau, eta)
        residual = float(np.max(np.abs(nxt - phi)))
        phi = nxt
        if residual <= settings.tol:
            return phi, it, residual
    raise ConvergenceError(
        f"no convergence in {n_cap} iterations (residual {residual:.3e})",
        phi, n_cap, residual,
    )


def solve(
    network: InterbankNetwork,
    economy: EconomyParams,
    scenario: ShockScenario,
    regime: RegimeParams = VANILLA,
    settings: SolverSettings = DEFAULT_SETTINGS,
    phi0: np.ndarray | None = None,
) -> EquilibriumResult:
    """Solve for the equilibrium fitness vector.

    Starts from all-ones (greatest fixed point) unless phi0 is given;
    monotonicity of the iterates is only guaranteed from the top.
    """
    scenario.validate(network.n)
    z = compensate(network, economy.a).with_shock(scenario.shocked, scenario.epsilon)
    start = np.ones(network.n) if phi0 is None else np.asarray(phi0, dtype=float)
    phi, iterations, residual = _iterate(
        network, z, economy.s, regime.tau, regime.eta, start,
        settings, settings.iter_cap(network.n),
    )
    return EquilibriumResult(
        phi=phi,
        iterations=iterations,
        residual=residual,
        extent=extent_of_contagion(phi, settings.one_tol),
        distress=distress(phi),
    )


def fixed_points_from_starts(
    network: InterbankNetwork,
    economy: EconomyParams,
    scenario: ShockScenario,
    regime: RegimeParams,
    starts: np.ndarray,
    settings: SolverSettings = DEFAULT_SETTINGS,
) -> np.ndarray:
    """Iterate the map from a batch of starting points (m, n) until every
    row has converged; returns the (m, n) array of fixed points.

    Used to probe uniqueness of the equilibrium: away from degenerate
    parameter choices all rows agree with the greatest fixed point.
    """
    scenario.validate(network.n)
    z = compensate(network, economy.a).with_shock(scenario.shocked, scenario.epsilon)
    phi = np.array(starts, dtype=float)
    if phi.ndim != 2 or phi.shape[1] != network.n:
        raise ValueError("starts must have shape (m, n)")
    n_cap = settings.iter_cap(network.n)
    for _ in range(n_cap):
        nxt = fitness_map(network, z, phi, economy.s, regime.tau, regime.eta)
        residual = float(np.max(np.abs(nxt - phi)))
        phi = nxt
        if residual <= settings.tol:
            return phi
    raise ConvergenceError(
        f"batched iteration did not converge in {n_cap} iterations",
        phi, n_cap, residual,
    )


def extent_of_contagion(phi: np.ndarray, one_tol: float = 1e-9) -> float:
    """Fraction of banks with phi < 1 (counted with a tolerance: in
    floating point the exact-ones indicator needs slack one_tol)."""
    phi = np.asarray(phi, dtype=float)
    return 1.0 - float(np.count_nonzero(phi >= 1.0 - one_tol)) / phi.size


def distress(phi: np.ndarray) -> float:
    """One minus average fitness."""
    phi = np.asarray(phi, dtype=float)
    return 1.0 - float(phi.mean())


def social_surplus(
    network: InterbankNetwork,
    economy: EconomyParams,
    scenario: ShockScenario,
    result: EquilibriumResult,
    defaults_scaled_by_n: bool = False,
) -> float:
    """Interbank social surplus u = n(a+A) - p*eps - (1-zeta) * sum l_i,
    with liquidation decisions evaluated at the equilibrium incomes.

    With zeta = 0 this reduces to n(a+A) - p*eps - A * #defaults.
    `defaults_scaled_by_n` switches (zeta = 0 only) to the variant with
    an extra factor n on the default term, kept for comparison.
    """
    n, a, s, A, zeta = economy.n, economy.a, economy.s, economy.A, economy.zeta
    z = compensate(network, a).with_shock(scenario.shocked, scenario.epsilon)
    h = bank_income(network, z, result.phi)
    total = n * (a + A) - scenario.p * scenario.epsilon
    if defaults_scaled_by_n:
        if zeta != 0:
            raise ValueError("defaults_scaled_by_n is only defined for zeta = 0")
        return total - n * A * round(result.extent * n)
    liq = sum(
        liquidation_decision(h[i], s, network.liability[i], A, zeta) for i in range(n)
    )
    return total - (1 - zeta) * liq
