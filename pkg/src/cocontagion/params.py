"""Scalar model parameters and shock scenarios."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class EconomyParams:
    """Scalar constants shared by every bank in the economy.

    n     -- number of banks
    a     -- short-term project return with no shock (must exceed s)
    s     -- senior obligations per bank, paid before interbank debt
    y     -- total junior interbank liability per bank (face value,
             inclusive of interest; principal and rate are not modelled
             separately)
    A     -- long-term project value, liquidated only under distress
    zeta  -- liquidation recovery fraction
    """

    n: int
    a: float
    s: float
    y: float
    A: float = 0.0
    zeta: float = 0.0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 banks, got n={self.n}")
        if not self.a > self.s >= 0:
            raise ValueError(f"need a > s >= 0, got a={self.a}, s={self.s}")
        if self.y <= 0:
            raise ValueError(f"need y > 0, got y={self.y}")
        if self.A < 0:
            raise ValueError(f"need A >= 0, got A={self.A}")
        if not 0 <= self.zeta <= 1:
            raise ValueError(f"need zeta in [0,1], got zeta={self.zeta}")


@dataclass(frozen=True)
class RegimeParams:
    """Repayment regime: (0, 0) is vanilla bonds, tau > 0 adds the CoCo
    trigger, eta > 0 adds equity liquidation of converted shares.

    tau -- trigger capital ratio: a CoCo converts when equity/value <= tau
    eta -- effective market value of converted shares; floor of fitness
    """

    tau: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        if not 0 <= self.tau < 1:
            raise ValueError(f"need tau in [0,1), got tau={self.tau}")
        if not 0 <= self.eta <= 1:
            raise ValueError(f"need eta in [0,1], got eta={self.eta}")

    @property
    def is_vanilla(self) -> bool:
        return self.tau == 0 and self.eta == 0

    def no_trigger_at_rest(self, economy: EconomyParams) -> bool:
        """Whether an unshocked bank stays above the trigger boundary:
        (1-tau)*a - s >= tau*y.

        The closed-form threshold analysis assumes this holds; the
        simulator does not require it (when violated even a zero shock
        triggers systemically).
        """
        if self.tau == 0:
            return True
        return (1 - self.tau) * economy.a - economy.s >= self.tau * economy.y


VANILLA = RegimeParams(0.0, 0.0)


@dataclass(frozen=True)
class ShockScenario:
    """A deterministic shock: each bank in `shocked` (0-based indices)
    loses epsilon of its short-term return."""

    shocked: frozenset[int] = field(default_factory=frozenset)
    epsilon: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "shocked", frozenset(self.shocked))
        if self.epsilon < 0:
            raise ValueError(f"need epsilon >= 0, got {self.epsilon}")
        if any(i < 0 for i in self.shocked):
            raise ValueError("shocked bank indices must be nonnegative")

    def validate(self, n: int) -> None:
        if any(i >= n for i in self.shocked):
            raise ValueError(f"shocked indices out of range for n={n}")

    @property
    def p(self) -> int:
        """Number of shocked banks."""
        return len(self.shocked)


def single_shock(epsilon: float, bank: int = 0) -> ShockScenario:
    """Shock a single bank (bank 0 by default; regular topologies are
    vertex-transitive so the choice is immaterial for ring/complete)."""
    return ShockScenario(frozenset({bank}), epsilon)


@dataclass(frozen=True)
class SolverSettings:
    """Fixed-point iteration controls.

    one_tol is the threshold for counting a bank as whole (phi = 1) in
    the extent of contagion; it must dominate the convergence tolerance
    so converged ones are never misclassified.
    """

    tol: float = 1e-12
    max_iter: int | None = None  # defaults to 10 * n * 1000 at solve time
    one_tol: float = 1e-9

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.one_tol < self.tol:
            raise ValueError("one_tol must be >= tol")

    def iter_cap(self, n: int) -> int:
        return self.max_iter if self.max_iter is not None else 10 * n * 1000
