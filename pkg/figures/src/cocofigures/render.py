"""Figure rendering. Pure function of the parsed CSV content: a fixed
style sheet, fixed panel layout and a pinned SVG hash salt keep repeated
renders byte-identical for the same inputs."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import (
    SchemaError,
    read_eta_curve_csv,
    read_phase_csv,
    read_sweep_csv,
    read_thresholds_json,
)

KINDS = ("sweep", "phase", "eta_curve")

RING_COLOR = "tab:blue"
COMPLETE_COLOR = "tab:green"
INTERMEDIATE_COLORS = ("tab:orange", "tab:red", "tab:purple", "tab:brown",
                       "tab:pink", "tab:olive", "tab:cyan", "tab:gray")

_STYLE = {
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "cocofigures",
}


@dataclass(frozen=True)
class FigureSpec:
    """One render request: what to read, how to interpret it, where to
    write the image."""

    kind: str  # sweep | phase | eta_curve
    input_csv: Path
    output: Path
    thresholds_json: Path | None = None
    eps_cap: float = 100.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "eta_curve" and self.eps_cap <= 0:
            raise ValueError("eps_cap must be positive")


def render(spec: FigureSpec) -> Path:
    """Render one figure; returns the output path. Raises SchemaError
    before anything is written if the inputs do not validate."""
    draw = {"sweep": _draw_sweep, "phase": _draw_phase, "eta_curve": _draw_eta}[spec.kind]
    with plt.rc_context(_STYLE):
        fig = draw(spec)
        try:
            out = Path(spec.output)
            out.parent.mkdir(parents=True, exist_ok=True)
            metadata = {"Date": None} if out.suffix == ".svg" else None
            fig.savefig(out, metadata=metadata)
        finally:
            plt.close(fig)
    return Path(spec.output)


def _curve_style(topology: str, c: int, index: int) -> dict:
    if topology == "ring":
        return {"color": RING_COLOR, "label": "ring"}
    if topology == "complete":
        return {"color": COMPLETE_COLOR, "label": "complete"}
    color = INTERMEDIATE_COLORS[index % len(INTERMEDIATE_COLORS)]
    return {"color": color, "label": f"c = {c}"}


def _draw_sweep(spec: FigureSpec):
    data = read_sweep_csv(spec.input_csv)
    thresholds = (read_thresholds_json(spec.thresholds_json)
                  if spec.thresholds_json is not None else None)
    fig, (ax_e, ax_d) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    intermediate = 0
    for (topology, c), series in sorted(data.curves.items(), key=lambda kv: kv[0][1]):
        style = _curve_style(topology, c, intermediate)
        if topology not in ("ring", "complete"):
            intermediate += 1
        ax_e.plot(series["eps"], series["mean_E"], **style)
        ax_d.plot(series["eps"], series["mean_D"], **style)
    if thresholds is not None:
        for ax in (ax_e, ax_d):
            ax.axvline(thresholds["eps_star"], color="black", linestyle=":",
                       linewidth=1.2, label=r"$\varepsilon^*$")
    ax_e.set_ylabel(r"extent of contagion $E(\phi)$")
    ax_d.set_ylabel(r"system distress $D(\phi)$")
    for ax in (ax_e, ax_d):
        ax.set_xlabel(r"shock size $\varepsilon$")
        ax.set_ylim(-0.02, 1.02)
    ax_e.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    return fig


def _draw_phase(spec: FigureSpec):
    data = read_phase_csv(spec.input_csv)
    ys = np.unique(data.y)
    epss = np.unique(data.eps)
    if ys.size * epss.size != len(data.y):
        raise SchemaError(f"{spec.input_csv}: rows do not form a full (y, eps) grid")
    shape = (ys.size, epss.size)
    order = np.lexsort((data.eps, data.y))
    ring = np.asarray(data.ring_safe)[order].reshape(shape)
    comp = np.asarray(data.complete_safe)[order].reshape(shape)
    # 0: both unsafe, 1: safe for the ring only, 2: safe for both
    # (safe-for-complete-only does not occur: the regions are nested)
    levels = ring + comp
    fig, ax = plt.subplots(figsize=(6, 4.5))
    mesh = ax.pcolormesh(
        epss, ys, levels,
        cmap=matplotlib.colors.ListedColormap(["#d9534f", "#a8c6e8", "#3d85c6"]),
        vmin=-0.5, vmax=2.5, shading="nearest",
    )
    bar = fig.colorbar(mesh, ax=ax, ticks=[0, 1, 2])
    bar.ax.set_yticklabels(["systemic (both)", "ring safe only", "both safe"])
    ax.set_xlabel(r"shock size $\varepsilon$")
    ax.set_ylabel(r"interbank exposure $y$")
    fig.tight_layout()
    return fig


def _draw_eta(spec: FigureSpec):
    data = read_eta_curve_csv(spec.input_csv)
    cap = spec.eps_cap
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for values, capped, color, label in (
        (data.eps_star_ring, data.capped_ring, RING_COLOR, "ring"),
        (data.eps_star_complete, data.capped_complete, COMPLETE_COLOR, "complete"),
    ):
        eta = np.asarray(data.eta)
        clipped = np.minimum(np.asarray(values), cap)
        flagged = np.asarray(capped, dtype=bool)
        ax.plot(eta, clipped, color=color, label=label)
        if flagged.any():
            ax.plot(eta[flagged], clipped[flagged], linestyle="none",
                    marker="^", color=color, markersize=5)
    ax.set_ylim(0, cap * 1.05)
    ax.set_xlabel(r"equity liquidation value $\eta$")
    ax.set_ylabel(r"critical shock $\varepsilon^*$")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    return fig
