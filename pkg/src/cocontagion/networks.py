"""Construction of the regular liability network families.

The claims matrix stores claims[i, j] = face value bank j owes bank i.
liability_i (what bank i owes) is therefore the i-th column sum and
claim_total_i (what the system owes bank i) the i-th row sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

MAX_SAMPLE_RETRIES = 1000


@dataclass(frozen=True)
class InterbankNetwork:
    claims: np.ndarray  # (n, n), claims[i, j] = y_ij owed by j to i
    y: float  # nominal per-bank junior liability
    label: str  # "ring", "complete" or "regular(c)"
    seed: int | None = None
    liability: np.ndarray = field(init=False, repr=False)
    claim_total: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        claims = np.asarray(self.claims, dtype=float)
        if claims.ndim != 2 or claims.shape[0] != claims.shape[1]:
            raise ValueError("claims must be a square matrix")
        if (claims < 0).any():
            raise ValueError("claims must be nonnegative")
        if np.diagonal(claims).any():
            raise ValueError("claims must have a zero diagonal (no self-loops)")
        claims.flags.writeable = False
        object.__setattr__(self, "claims", claims)
        object.__setattr__(self, "liability", claims.sum(axis=0))
        object.__setattr__(self, "claim_total", claims.sum(axis=1))
        self.liability.flags.writeable = False
        self.claim_total.flags.writeable = False

    @property
    def n(self) -> int:
        return self.claims.shape[0]


@dataclass(frozen=True)
class CompensatedInvestments:
    """Per-bank no-shock investments z_i = a + (liability_i - claim_total_i).

    The correction absorbs the imbalance left by pruning self-loops and
    multi-edges, so the all-ones fitness vector is a rest-point again.
    """

    base: np.ndarray

    def with_shock(self, shocked, epsilon: float) -> np.ndarray:
        z = self.base.copy()
        z[list(shocked)] -= epsilon
        return z


def make_ring(n: int, y: float) -> InterbankNetwork:
    """Directed cycle: bank i is the unique creditor of bank i-1 (and
    bank 1 of bank n), each edge carrying the full liability y."""
    _check_ny(n, y)
    claims = np.zeros((n, n))
    for i in range(n):
        claims[i, i - 1] = y  # i == 0 wraps to the last bank
    return InterbankNetwork(claims, y, "ring")


def make_complete(n: int, y: float) -> InterbankNetwork:
    """Every bank's liability split equally over the other n-1 banks."""
    _check_ny(n, y)
    claims = np.full((n, n), y / (n - 1))
    np.fill_diagonal(claims, 0.0)
    return InterbankNetwork(claims, y, "complete")


def make_random_regular(n: int, c: int, y: float, seed: int) -> InterbankNetwork:
    """Directed configuration model with in- and out-degree c.

    Each node gets c in-stubs and c out-stubs; out-stubs are matched to
    in-stubs by a uniform random permutation. Self-loops are dropped and
    multi-edges collapsed to a single edge, so realized degrees can fall
    below c; every surviving edge carries weight y/c. Samples leaving
    some bank with zero liability are rejected and redrawn (bounded
    retries). Deterministic for a fixed seed.
    """
    _check_ny(n, y)
    if not 1 <= c <= n - 1:
        raise ValueError(f"need 1 <= c <= n-1, got c={c}, n={n}")
    rng = np.random.default_rng(seed)
    creditors = np.repeat(np.arange(n), c)
    for _ in range(MAX_SAMPLE_RETRIES):
        debtors = rng.permutation(creditors)
        adj = np.zeros((n, n), dtype=bool)
        adj[creditors, debtors] = True  # collapses multi-edges
        np.fill_diagonal(adj, False)
        if adj.sum(axis=0).all():  # every bank keeps some liability
            claims = np.where(adj, y / c, 0.0)
            return InterbankNetwork(claims, y, f"regular({c})", seed=seed)
    raise RuntimeError(
        f"no admissible configuration-model sample in {MAX_SAMPLE_RETRIES} tries "
        f"(n={n}, c={c}, seed={seed})"
    )


def compensate(network: InterbankNetwork, a: float) -> CompensatedInvestments:
    return CompensatedInvestments(a + network.liability - network.claim_total)


def _check_ny(n: int, y: float) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if y <= 0:
        raise ValueError(f"need y > 0, got {y}")


def edge_list_text(network: InterbankNetwork) -> str:
    """Text edge list: header `n y label seed`, then 1-indexed
    `i j weight` rows in row-major order."""
    lines = [
        f"{network.n} {network.y:.17g} {network.label} "
        f"{'-' if network.seed is None else network.seed}"
    ]
    rows, cols = np.nonzero(network.claims)
    for i, j in zip(rows, cols):
        lines.append(f"{i + 1} {j + 1} {network.claims[i, j]:.17g}")
    return "\n".join(lines) + "\n"


def write_edge_list(network: InterbankNetwork, path: str | Path) -> None:
    Path(path).write_text(edge_list_text(network))


def read_edge_list(path: str | Path) -> InterbankNetwork:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"empty network file {path}")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError(f"malformed network header: {lines[0]!r}")
    n, y, label, seed_tok = int(header[0]), float(header[1]), header[2], header[3]
    claims = np.zeros((n, n))
    for line in lines[1:]:
        if not line.strip():
            continue
        i_s, j_s, w_s = line.split()
        claims[int(i_s) - 1, int(j_s) - 1] = float(w_s)
    seed = None if seed_tok == "-" else int(seed_tok)
    return InterbankNetwork(claims, y, label, seed=seed)
