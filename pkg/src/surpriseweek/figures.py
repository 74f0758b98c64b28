"""Figure rendering for the report commands.

Each report path can drop a PNG next to its delimited output. Rendering
is headless (Agg) and deterministic for a given report.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Patch, Rectangle

from .analysis import LawReport, SystemRecord
from .runs import RUNS, format_runs
from .verification import VerificationReport

_IN_SET = "#9ecae1"
_SURPRISING = "#fd8d3c"
_EMPTY = "#f5f5f5"
_PASS = "#74c476"
_FAIL = "#de2d26"


def _run_row(ax, y, members, surprising, height=0.8):
    for r in RUNS:
        if r in surprising:
            color = _SURPRISING
        elif r in members:
            color = _IN_SET
        else:
            color = _EMPTY
        ax.add_patch(Rectangle((r, y), 1, height, facecolor=color,
                               edgecolor="white", linewidth=0.5))


def save_enumeration_figure(records: tuple[SystemRecord, ...], path: str) -> None:
    """Grid of the 64 axiom systems: admitted runs vs surprising days."""
    fig, ax = plt.subplots(figsize=(6, 12))
    for row, record in enumerate(records):
        _run_row(ax, len(records) - 1 - row, record.knowledge, record.surprising)
    ax.set_xlim(0, 6)
    ax.set_ylim(0, len(records))
    ax.set_xticks([r + 0.5 for r in RUNS])
    ax.set_xticklabels([r.label for r in RUNS])
    ax.set_yticks([len(records) - 1 - i + 0.5 for i in range(len(records))])
    ax.set_yticklabels([format_runs(r.knowledge) for r in records], fontsize=5)
    ax.set_title("axiom systems: admitted runs and surprising days")
    ax.legend(handles=[
        Patch(facecolor=_IN_SET, label="admitted"),
        Patch(facecolor=_SURPRISING, label="surprising"),
    ], loc="upper right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_law_figure(report: LawReport, path: str) -> None:
    """One row of runs for a law report, surprising days highlighted."""
    fig, ax = plt.subplots(figsize=(6, 1.8))
    _run_row(ax, 0, report.law, report.surprising)
    ax.set_xlim(0, 6)
    ax.set_ylim(-0.4, 1.2)
    ax.set_xticks([r + 0.5 for r in RUNS])
    ax.set_xticklabels([r.label for r in RUNS])
    ax.set_yticks([])
    ax.set_title(f"law {format_runs(report.law)}: {report.case_tag.value}, "
                 f"surprising {format_runs(report.surprising)}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verification_figure(report: VerificationReport, path: str) -> None:
    """Pass/fail bars, one per verification check."""
    checks = report.checks
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(checks) + 1))
    for i, check in enumerate(reversed(checks)):
        ax.barh(i, 1, color=_PASS if check.passed else _FAIL, height=0.7)
        ax.text(0.02, i, f"{check.name}: {check.status}", va="center",
                fontsize=8)
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.6, len(checks) - 0.4)
    ax.set_xticks([])
    ax.set_yticks([])
    good = sum(c.passed for c in checks)
    ax.set_title(f"verification: {good}/{len(checks)} checks passed")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
