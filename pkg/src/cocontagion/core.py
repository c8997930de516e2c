"""Pointwise balance-sheet arithmetic: activation, payoff waterfall,
trigger test, conversion split and liquidation decision.

All functions are pure and operate on scalars; the solver applies the
same formulas vectorized.
"""

from __future__ import annotations


def activation(h: float, y_i: float, s: float) -> float:
    """Fraction of junior debt repaid out of income h: min(1, (h-s)/y_i)^+.

    Piecewise linear, 0 for h <= s, 1 for h >= s + y_i.
    """
    if y_i <= 0:
        raise ValueError(f"activation needs y_i > 0, got {y_i}")
    return min(1.0, max(0.0, (h - s) / y_i))


def vanilla_payoffs(V: float, s: float, y_i: float) -> tuple[float, float, float]:
    """Waterfall split of bank value V into (senior, junior, equity).

    Senior creditors are paid first, then junior (interbank) creditors
    pro rata, equity takes the residual. The three parts always sum to
    min(V, s + y_i) + equity = V.
    """
    if V < 0:
        raise ValueError(f"vanilla_payoffs needs V >= 0, got {V}")
    senior = min(s, V)
    junior = max(0.0, min(V - s, y_i))
    equity = max(0.0, V - s - y_i)
    return senior, junior, equity


def trigger_check(V: float, s: float, y_i: float, tau: float) -> bool:
    """Capital-ratio trigger: equity/value <= tau, i.e. V <= (s+y_i)/(1-tau)."""
    if not 0 <= tau < 1:
        raise ValueError(f"need tau in [0,1), got {tau}")
    return V <= (s + y_i) / (1 - tau)


def conversion_split(V: float, s: float, y_i: float, tau: float) -> tuple[float, float]:
    """Split the CoCo face value into (unconverted, converted) parts.

    unconverted = min(y_i, (1-tau)*V - s)^+. Three regimes: partial
    conversion for s/(1-tau) <= V <= (s+y_i)/(1-tau), full conversion
    for s <= V <= s/(1-tau), and equity wiped first for V <= s.
    """
    if V < 0:
        raise ValueError(f"conversion_split needs V >= 0, got {V}")
    if not 0 <= tau < 1:
        raise ValueError(f"need tau in [0,1), got {tau}")
    unconverted = max(0.0, min(y_i, (1 - tau) * V - s))
    return unconverted, y_i - unconverted


def liquidation_decision(h: float, s: float, y_i: float, A: float, zeta: float) -> float:
    """Amount of the long-term project liquidated to cover the shortfall
    of income h against obligations s + y_i.

    For zeta > 0: min((s + y_i - h)/zeta, A)^+. The zeta = 0 branch is
    the zeta -> 0+ limit: full liquidation A on any shortfall, else 0.
    """
    if A < 0:
        raise ValueError(f"need A >= 0, got {A}")
    if not 0 <= zeta <= 1:
        raise ValueError(f"need zeta in [0,1], got {zeta}")
    shortfall = s + y_i - h
    if zeta == 0:
        return A if shortfall > 0 else 0.0
    return max(0.0, min(shortfall / zeta, A))
