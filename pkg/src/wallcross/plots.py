"""Matplotlib figures rendered next to the delimited reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from wallcross.conjectures import GoodBoxDiffReport, SignReport, semantics_key
from wallcross.orbits import OrbitTrace
from wallcross.partitions import Partition
from wallcross.verify import TheoremSummary

CELL = dict(facecolor="#9ecae1", edgecolor="#08306b", linewidth=0.8)
DIFF = dict(facecolor="#fdae6b", edgecolor="#7f2704", linewidth=0.8)


def draw_partition(ax, p: Partition, highlight=None, title: str | None = None):
    """English-notation Young diagram; rows grow downward."""
    depth = max(len(p), 1)
    width = max(p.row_length(1), 1)
    for r, length in enumerate(p.parts, 1):
        for c in range(1, length + 1):
            style = DIFF if highlight and (r, c) == tuple(highlight) else CELL
            ax.add_patch(Rectangle((c - 1, -r), 1, 1, **style))
    ax.set_xlim(-0.2, width + 0.2)
    ax.set_ylim(-depth - 0.2, 0.2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=8)


def orbit_figure(trace: OrbitTrace):
    states = trace.states()
    labels = ["start"] + [str(s.wall) for s in trace.steps]
    fig, axes = plt.subplots(1, len(states), figsize=(1.1 * len(states) + 1, 2.4))
    if len(states) == 1:
        axes = [axes]
    for ax, state, label in zip(axes, states, labels):
        draw_partition(ax, state, title=f"{label}\n{state}")
    fig.suptitle(f"orbit of {trace.start} ({trace.mode})")
    fig.tight_layout()
    return fig


def sign_figure(report: SignReport):
    fig, ax = plt.subplots(figsize=(max(6, 0.5 * len(report.rows)), 3.5))
    xs = range(1, len(report.rows) + 1)
    for field, marker in (("x", "o"), ("y", "s"), ("z", "^"), ("t", "d")):
        ys = [
            getattr(row.assignment, field) if row.assignment else None for row in report.rows
        ]
        ax.plot(xs, ys, marker=marker, markersize=4, label=field)
    for i, row in enumerate(report.rows, 1):
        if row.role == "threshold":
            ax.axvline(i, color="0.8", linewidth=0.8, zorder=0)
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(r.wall) for r in report.rows], rotation=60, fontsize=7)
    ax.set_xlabel("wall")
    ax.set_ylabel("fitted block parameters")
    ax.set_title(f"sign sweep n={report.n}: {report.status} (grey lines: thresholds)")
    ax.legend(fontsize=7)
    fig.tight_layout()
    return fig


def goodbox_figure(reports: list[GoodBoxDiffReport]):
    from wallcross.conjectures import ALL_SEMANTICS

    keys = [semantics_key(sense, rule) for sense, rule in ALL_SEMANTICS]
    good = {k: 0 for k in keys}
    total = {k: 0 for k in keys}
    for rep in reports:
        for ch in rep.chambers:
            for k in keys:
                if ch.goodness.get(k) is not None:
                    total[k] += 1
                    good[k] += bool(ch.goodness[k])
    fig, ax = plt.subplots(figsize=(6, 3))
    rates = [good[k] / total[k] if total[k] else 0.0 for k in keys]
    ax.bar(keys, rates, color="#74c476", edgecolor="#00441b")
    for i, k in enumerate(keys):
        ax.text(i, rates[i] + 0.02, f"{good[k]}/{total[k]}", ha="center", fontsize=8)
    ax.set_ylim(0, 1.15)
    ax.set_ylabel("good-box rate")
    ax.set_title(f"added-box goodness over {len(reports)} pairs")
    plt.setp(ax.get_xticklabels(), rotation=15, fontsize=8)
    fig.tight_layout()
    return fig


def theorem_figure(summary: TheoremSummary):
    fig, ax = plt.subplots(figsize=(6, 3))
    ns = [r.n for r in summary.results]
    ax.bar(ns, [r.seconds for r in summary.results],
           color=["#74c476" if r.ok else "#fb6a4a" for r in summary.results])
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_title(f"chamber-chain equivalence up to n={summary.n_max}:"
                 f" {'PASS' if summary.ok else 'FAIL'}")
    fig.tight_layout()
    return fig


def save_figure(fig, path) -> None:
    fig.savefig(path, dpi=150)
    plt.close(fig)
