"""Closed-form equilibria, thresholds and critical shocks for the ring
and complete networks.

These expressions are kept in the literal form of their derivations
(no algebraic simplification) and serve as the independent oracle for
the simulator. No closed forms exist for intermediate connectivity.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import activation

_ONE_TOL = 1e-9
_CLAMP_WARN = 1e-9


class ClosedFormDomainError(ValueError):
    """Parameters fall outside the region a closed form covers."""


def vanilla_thresholds(n: int, a: float, s: float) -> tuple[float, float]:
    """Systemic thresholds without CoCos: eps* = n(a-s) (the system's
    total excess liquidity) and y* = (n-1)(a-s)."""
    if n < 2 or not a > s:
        raise ValueError("need n >= 2 and a > s")
    return n * (a - s), (n - 1) * (a - s)


class RingEquilibrium(NamedTuple):
    phi: np.ndarray
    n_insolvent: int
    extent: float
    distress: float


class CompleteEquilibrium(NamedTuple):
    phi_s: float
    phi_ns: float
    extent: float
    distress: float

    def phi_vector(self, n: int) -> np.ndarray:
        phi = np.full(n, self.phi_ns)
        phi[0] = self.phi_s
        return phi


def ring_closed_form_vanilla(
    n: int, a: float, s: float, y: float, eps: float
) -> RingEquilibrium:
    """Vanilla ring equilibrium after a single shock of size eps >= a-s.

    Small-shock / low-exposure branch (eps <= eps* or y <= y*):
    phi_1 = f(y + a - eps), phi_i = phi_1 + (i-1)(a-s)/y capped at 1.
    Large-shock high-exposure branch: phi_1 = 0, phi_i = (i-1)(a-s)/y,
    independent of eps.
    """
    eps_star, y_star = vanilla_thresholds(n, a, s)
    if eps < a - s:
        raise ClosedFormDomainError(
            f"closed form needs eps >= a - s = {a - s} (shocked bank insolvent)"
        )
    if eps <= eps_star or y <= y_star:
        phi1 = activation(y + a - eps, y, s)
        phi = np.minimum(1.0, phi1 + np.arange(n) * (a - s) / y)
    else:
        phi = np.arange(n) * (a - s) / y
        phi = np.minimum(1.0, phi)  # all < 1 here since y > y*
    n_insolvent = int(np.count_nonzero(phi < 1.0 - _ONE_TOL))
    return RingEquilibrium(phi, n_insolvent, n_insolvent / n, 1.0 - float(phi.mean()))


def complete_closed_form_vanilla(
    n: int, a: float, s: float, y: float, eps: float
) -> CompleteEquilibrium:
    """Vanilla complete-network equilibrium after a single shock.

    Either the rest of the system absorbs the shock (phi_ns = 1,
    phi_s = (1 - (eps-(a-s))/y)^+) or, for eps > eps* and y > y*, the
    contagion is systemic (phi_s = 0, phi_ns = y*/y).
    """
    eps_star, y_star = vanilla_thresholds(n, a, s)
    if eps < a - s:
        raise ClosedFormDomainError(
            f"closed form needs eps >= a - s = {a - s} (shocked bank insolvent)"
        )
    if y <= y_star or eps <= eps_star:
        phi_s = max(0.0, 1.0 - (eps - (a - s)) / y)
        phi_ns = 1.0
    else:
        phi_s = 0.0
        phi_ns = y_star / y
    whole = (phi_s >= 1 - _ONE_TOL) + (n - 1) * (phi_ns >= 1 - _ONE_TOL)
    extent = 1.0 - whole / n
    distr = 1.0 - (phi_s + (n - 1) * phi_ns) / n
    return CompleteEquilibrium(phi_s, phi_ns, extent, distr)


@dataclass(frozen=True)
class StabilityRegion:
    """Safe region of the (y, eps) plane for one topology and trigger
    ratio: the union of low exposure (y <= y_star), small shock
    (eps <= eps_star_of_y(y)) and no shock (eps <= eps_noshock_of_y(y)).

    lam encodes the network mixing; b = (1-tau)*a - s is the per-bank
    excess liquidity after the trigger haircut.
    """

    tau: float
    lam: float
    b: float
    y_star: float
    eps_slope: float  # slope of the affine shock threshold
    eps_intercept: float  # its value at y = 0

    def eps_star_of_y(self, y):
        return self.eps_intercept + self.eps_slope * np.asarray(y, dtype=float)

    def eps_noshock_of_y(self, y):
        return (self.b - self.tau * np.asarray(y, dtype=float)) / (1 - self.tau)

    def is_safe(self, y, eps):
        y = np.asarray(y, dtype=float)
        eps = np.asarray(eps, dtype=float)
        return (
            (y <= self.y_star)
            | (eps <= self.eps_star_of_y(y))
            | (eps <= self.eps_noshock_of_y(y))
        )


def stability_region(lam: float, b: float, tau: float) -> StabilityRegion:
    """Region of (y, eps) where the cascade stops short of systemic:
    y*_lam = b*lam/tau and the affine shock threshold

        eps*_lam(y) = b(lam/tau + 1/(1-tau))
                      - (y - y*_lam)(1/((1-tau)(1-lam)) - 1).
    """
    if not 0 < tau < 1:
        raise ValueError("stability_region needs tau in (0,1); at tau = 0 use "
                         "vanilla_thresholds (the limit region)")
    if not 0 <= lam <= 1:
        raise ValueError(f"need lam in [0,1], got {lam}")
    # b may be negative (no post-haircut excess liquidity): the safe
    # region is then empty for every nonnegative shock
    y_star = b * lam / tau
    slope = -(1 / ((1 - tau) * (1 - lam)) - 1)
    at_y_star = b * (lam / tau + 1 / (1 - tau))
    return StabilityRegion(
        tau=tau,
        lam=lam,
        b=b,
        y_star=y_star,
        eps_slope=slope,
        eps_intercept=at_y_star - slope * y_star,
    )


def coco_thresholds(
    n: int, a: float, s: float, tau: float, topology: str
) -> StabilityRegion:
    """Safe region with CoCos for `topology` in {ring, complete}.

    Ring uses lam = 1 - (1-tau)^(n-1); complete uses
    lam = tau(n-1)/(1 + tau(n-2)). At tau = 0 both collapse to the
    vanilla thresholds (flat shock threshold eps* = n(a-s)).
    """
    if topology not in ("ring", "complete"):
        raise ValueError(f"unknown topology {topology!r}")
    if tau == 0:
        eps_star, y_star = vanilla_thresholds(n, a, s)
        return StabilityRegion(
            tau=0.0, lam=0.0, b=a - s, y_star=y_star,
            eps_slope=0.0, eps_intercept=eps_star,
        )
    b = (1 - tau) * a - s
    if topology == "ring":
        lam = 1 - (1 - tau) ** (n - 1)
    else:
        lam = tau * (n - 1) / (1 + tau * (n - 2))
    return stability_region(lam, b, tau)


def coco_ring_extent(
    n: int, a: float, s: float, y: float, tau: float, eps: float
) -> float:
    """Fraction of banks triggered in the ring's safe region:

        E = log((phi_inf - 1)/(phi_inf - phi_1)) / (n log(1-tau)),

    with phi_inf = ((1-tau)a - s)/(tau*y) and
    phi_1 = f((1-tau)(y + a - eps)). Requires phi_inf > 1 (otherwise the
    regime is systemic and the extent is simply 1).
    """
    if not 0 < tau < 1:
        raise ValueError(f"need tau in (0,1), got {tau}")
    phi_inf = ((1 - tau) * a - s) / (tau * y)
    if phi_inf <= 1:
        raise ClosedFormDomainError(
            f"phi_inf = {phi_inf:.6g} <= 1: systemic regime, extent is 1"
        )
    phi1 = activation((1 - tau) * (y + a - eps), y, s)
    raw = math.log((phi_inf - 1) / (phi_inf - phi1)) / (n * math.log(1 - tau))
    return _clamped(raw, "coco_ring_extent")


def critical_shock_liq(
    n: int, a: float, s: float, y: float, tau: float, eta: float, topology: str
) -> float:
    """Critical shock size beyond which the triggering is systemic, with
    equity liquidation value eta.

    Ring:     B * (1-eta)(1 - C^n) / (C^n (1 - C)),  C = (1-eta)(1-tau)
    Complete: B * (n - tau - eta(1-tau)) / ((1-eta)(1-tau)^2)

    with B = (1-tau)(a+y) - (s+y). At tau = eta = 0 both reduce to
    n(a-s) (the ring via the C -> 1 limit). B <= 0 means any shock is
    systemic; the function then returns 0.
    """
    if topology not in ("ring", "complete"):
        raise ValueError(f"unknown topology {topology!r}")
    if not 0 <= tau < 1 or not 0 <= eta < 1:
        raise ValueError("need tau, eta in [0,1)")
    bracket = (1 - tau) * (a + y) - (s + y)
    if bracket <= 0:
        return 0.0  # maximal exposure: systemic at any shock
    if topology == "ring":
        C = (1 - eta) * (1 - tau)
        if C == 1:  # tau = eta = 0, geometric sum limit
            return n * bracket
        return bracket * (1 - eta) * (1 - C**n) / (C**n * (1 - C))
    return bracket * (n - tau - eta * (1 - tau)) / ((1 - eta) * (1 - tau) ** 2)


def _clamped(value: float, name: str) -> float:
    if value < -_CLAMP_WARN or value > 1 + _CLAMP_WARN:
        warnings.warn(f"{name}: raw value {value:.6g} outside [0,1]", stacklevel=3)
    return min(1.0, max(0.0, value))
