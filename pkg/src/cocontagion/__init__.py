"""Contagion in regular interbank networks with contingent convertible bonds.

The package simulates fitness propagation on ring, complete and random
regular liability networks, under vanilla bonds (tau = eta = 0), CoCo
conversion (tau > 0) and CoCo conversion with equity liquidation
(eta > 0), and evaluates the matching closed-form thresholds.
"""

from .params import EconomyParams, RegimeParams, ShockScenario, SolverSettings
from .core import (
    activation,
    vanilla_payoffs,
    trigger_check,
    conversion_split,
    liquidation_decision,
)
from .networks import (
    InterbankNetwork,
    CompensatedInvestments,
    make_ring,
    make_complete,
    make_random_regular,
    compensate,
    write_edge_list,
    read_edge_list,
)
from .equilibrium import (
    EquilibriumResult,
    ConvergenceError,
    bank_income,
    fitness_map,
    solve,
    fixed_points_from_starts,
    extent_of_contagion,
    distress,
    social_surplus,
)
from .analytics import (
    StabilityRegion,
    vanilla_thresholds,
    ring_closed_form_vanilla,
    complete_closed_form_vanilla,
    stability_region,
    coco_thresholds,
    coco_ring_extent,
    critical_shock_liq,
)

__all__ = [
    "EconomyParams",
    "RegimeParams",
    "ShockScenario",
    "SolverSettings",
    "activation",
    "vanilla_payoffs",
    "trigger_check",
    "conversion_split",
    "liquidation_decision",
    "InterbankNetwork",
    "CompensatedInvestments",
    "make_ring",
    "make_complete",
    "make_random_regular",
    "compensate",
    "write_edge_list",
    "read_edge_list",
    "EquilibriumResult",
    "ConvergenceError",
    "bank_income",
    "fitness_map",
    "solve",
    "fixed_points_from_starts",
    "extent_of_contagion",
    "distress",
    "social_surplus",
    "StabilityRegion",
    "vanilla_thresholds",
    "ring_closed_form_vanilla",
    "complete_closed_form_vanilla",
    "stability_region",
    "coco_thresholds",
    "coco_ring_extent",
    "critical_shock_liq",
]
