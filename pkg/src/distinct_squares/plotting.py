"""Figures for the ``bench`` and ``stats`` reports."""
from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}

MARKERS = "osD^v"


def _finish(fig, path: str) -> None:
    fig.tight_layout()
    # fixed metadata keeps repeated renders byte-comparable
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def scaling_figure(rows: Sequence[Mapping[str, object]], path: str) -> None:
    """Wall time against n on log-log axes, one line per input family.

    ``rows`` hold ``family``, ``n`` and ``total_ms``; a dashed slope-one line
    through the smallest measurement of each family marks linear growth.
    """
    families = sorted({str(r["family"]) for r in rows})
    with plt.rc_context(STYLE):
        fig, (ax, ax_ratio) = plt.subplots(1, 2, figsize=(7.0, 3.0))
        for k, fam in enumerate(families):
            pts = sorted((int(r["n"]), float(r["total_ms"])) for r in rows if r["family"] == fam)
            n = np.array([p[0] for p in pts], dtype=float)
            ms = np.array([p[1] for p in pts])
            line, = ax.loglog(n, ms, marker=MARKERS[k % len(MARKERS)], label=fam)
            ax.loglog(n, ms[0] * n / n[0], ls="--", lw=0.8, color=line.get_color(), alpha=0.6)
            if len(n) > 1:
                ax_ratio.plot(n[1:], ms[1:] / ms[:-1], marker=MARKERS[k % len(MARKERS)],
                              color=line.get_color(), label=fam)
        ax.set_xlabel("n")
        ax.set_ylabel("time (ms)")
        ax.set_title("end-to-end scan")
        ax.legend(frameon=False)
        ax_ratio.set_xscale("log", base=2)
        ax_ratio.axhline(2.0, color="0.6", lw=0.8)
        ax_ratio.axhline(3.0, color="0.3", lw=0.8, ls=":")
        ax_ratio.set_xlabel("n")
        ax_ratio.set_ylabel("time(n) / time(n/2)")
        ax_ratio.set_title("per doubling")
        _finish(fig, path)


def lpf_figure(lpf: Sequence[int], factor_starts: Sequence[int],
               squares: Sequence[tuple[int, int]], path: str) -> None:
    """LPF profile with factor borders above and square occurrences below."""
    n = len(lpf)
    pos = np.arange(1, n + 1)
    with plt.rc_context(STYLE):
        fig, (ax, ax_sq) = plt.subplots(
            2, 1, figsize=(7.0, 3.6), sharex=True, gridspec_kw={"height_ratios": [2, 1]}
        )
        ax.step(pos, lpf, where="mid", lw=0.9, color="k")
        for s in factor_starts:
            ax.axvline(s - 0.5, color="tab:red", lw=0.6, alpha=0.5)
        ax.set_ylabel("LPF")
        ax.set_title(f"n = {n}, z = {len(factor_starts)}")
        if squares:
            starts = np.array([s for s, _ in squares])
            lengths = np.array([l for _, l in squares])
            # stagger equal lengths so overlapping occurrences stay visible
            lane = np.zeros(len(squares))
            for k in range(1, len(squares)):
                if lengths[k] == lengths[k - 1]:
                    lane[k] = (lane[k - 1] + 1) % 4
            y = lengths + 0.2 * lane
            ax_sq.hlines(y, starts - 0.5, starts + lengths - 0.5, lw=1.2, color="tab:blue")
        ax_sq.set_ylabel("square length")
        ax_sq.set_xlabel("position")
        ax_sq.set_xlim(0.5, n + 0.5)
        _finish(fig, path)
