"""Render publication-style plots from gaussmet sweep CSVs.

Three figures are supported, each keyed to one sweep CSV schema:

- ``fig2``: log-log scalar bound tr(H^-1) against the photon number N with
  a 1/N^2 guide line, optionally with an inset of the bound against the
  mixing angle at a small fixed budget (pass the omega-sweep CSV via
  ``--inset-input``).
- ``fig4``: scalar bound against the displacement weight tau in [0, 1].
- ``fig5``: the four QFIM eigenvalues against the squeezing weight eta.

The module reads CSV only; it does not import or recompute any physics.
Rendering is deterministic for fixed CSV content (fixed style, no
timestamps added by this code).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_IDS = ("fig2", "fig4", "fig5")

REQUIRED_COLUMNS = {
    "fig2": ("N", "tr_inv"),
    "fig4": ("tau", "tr_inv"),
    "fig5": ("eta", "eig1", "eig2", "eig3", "eig4"),
}

INSET_COLUMNS = ("omega", "tr_inv")

plt.rcParams.update(
    {
        "figure.figsize": (5.2, 3.9),
        "figure.dpi": 130,
        "font.size": 10,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "svg.hashsalt": "gaussmet-figures",
    }
)


class ColumnError(ValueError):
    """The CSV lacks a column the figure needs; the message names it."""


@dataclass(frozen=True)
class FigureSpec:
    """Input CSV, figure id and output image path (plus optional inset CSV)."""

    input_csv: str
    figure_id: str
    output_path: str
    inset_csv: str | None = None

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}")


def read_columns(path: str, names: tuple) -> dict:
    """Named float columns from a headered CSV ('inf'/'nan' parse as floats)."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ColumnError(f"{path}: empty file") from None
        missing = [name for name in names if name not in header]
        if missing:
            raise ColumnError(f"{path}: missing column '{missing[0]}'")
        idx = {name: header.index(name) for name in names}
        data = {name: [] for name in names}
        for row in reader:
            for name in names:
                data[name].append(float(row[idx[name]]))
    return {name: np.asarray(vals) for name, vals in data.items()}


def _build_fig2(spec: FigureSpec):
    data = read_columns(spec.input_csv, REQUIRED_COLUMNS["fig2"])
    n, tr = data["N"], data["tr_inv"]
    fig, ax = plt.subplots()
    ax.loglog(n, tr, "o-", color="tab:blue", label="scalar bound")
    guide = tr[0] * (n / n[0]) ** -2.0
    ax.loglog(n, guide, "--", color="0.5", label=r"$\propto 1/N^2$")
    ax.set_xlabel("mean photon number $N$")
    ax.set_ylabel(r"$\mathrm{tr}\,H^{-1}$")
    ax.legend(loc="lower left")
    if spec.inset_csv is not None:
        inset = read_columns(spec.inset_csv, INSET_COLUMNS)
        sub = ax.inset_axes([0.58, 0.55, 0.38, 0.38])
        sub.plot(inset["omega"], inset["tr_inv"], color="tab:red")
        sub.set_xlabel(r"$\omega$", fontsize=8)
        sub.set_ylabel(r"$\mathrm{tr}\,H^{-1}$", fontsize=8)
        sub.tick_params(labelsize=7)
    fig.tight_layout()
    return fig


def _build_fig4(spec: FigureSpec):
    data = read_columns(spec.input_csv, REQUIRED_COLUMNS["fig4"])
    fig, ax = plt.subplots()
    ax.plot(data["tau"], data["tr_inv"], "o-", color="tab:blue")
    ax.set_xlabel(r"displacement weight $\tau$")
    ax.set_ylabel(r"$\mathrm{tr}\,H^{-1}$")
    ax.set_xlim(0.0, 1.0)
    fig.tight_layout()
    return fig


def _build_fig5(spec: FigureSpec):
    data = read_columns(spec.input_csv, REQUIRED_COLUMNS["fig5"])
    fig, ax = plt.subplots()
    styles = (("black", "o"), ("tab:blue", "s"), ("tab:orange", "^"), ("tab:green", "d"))
    for k, (color, marker) in enumerate(styles, start=1):
        ax.plot(
            data["eta"],
            data[f"eig{k}"],
            marker=marker,
            color=color,
            label=f"eigenvalue {k}",
        )
    ax.set_xlabel(r"squeezing weight $\eta$")
    ax.set_ylabel("QFIM eigenvalues")
    ax.set_xlim(0.0, 1.0)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


_BUILDERS = {"fig2": _build_fig2, "fig4": _build_fig4, "fig5": _build_fig5}


def build_figure(spec: FigureSpec):
    """The matplotlib Figure for a spec (kept separate for inspection)."""
    return _BUILDERS[spec.figure_id](spec)


def render(spec: FigureSpec) -> str:
    """Render the figure to ``spec.output_path``; returns the path."""
    fig = build_figure(spec)
    try:
        fig.savefig(spec.output_path)
    finally:
        plt.close(fig)
    return spec.output_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figure",
        description="Render a gaussmet sweep CSV as a publication-style figure.",
    )
    parser.add_argument("--input", required=True, help="sweep CSV path")
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--output", required=True, help="image path (png/pdf/svg)")
    parser.add_argument(
        "--inset-input",
        default=None,
        help="omega-sweep CSV for the fig2 inset (optional)",
    )
    args = parser.parse_args(argv)
    spec = FigureSpec(
        input_csv=args.input,
        figure_id=args.figure,
        output_path=args.output,
        inset_csv=args.inset_input,
    )
    try:
        render(spec)
    except FileNotFoundError as exc:
        print(f"render_figure: {exc}", file=sys.stderr)
        return 1
    except ColumnError as exc:
        print(f"render_figure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
