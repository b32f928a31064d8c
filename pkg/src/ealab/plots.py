"""SVG renderings of sweep record sets.

Both plots work straight off record lists as stored in the CSV schema, so
archived sweeps can be re-rendered without rerunning anything.  The Agg
backend is forced because these functions run headless, and the SVG hash
salt is pinned so identical inputs give identical files.
"""

from __future__ import annotations

import math
from collections import defaultdict
from statistics import fmean, median

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

plt.rcParams["svg.hashsalt"] = "ealab"

__all__ = ["plot_p_sweep", "plot_comparison"]


def plot_p_sweep(records, out_path) -> None:
    """Mean normalized runtime against p, one line per dimension.

    Censored runs enter at their recorded evaluation counts, which sit at
    the budget they ran out of, so saturated cells show up as plateaus.
    """
    groups = defaultdict(list)
    for r in records:
        groups[(r.n, r.p)].append(r.evaluations)
    by_n = defaultdict(list)
    for (n, p), evals in sorted(groups.items()):
        by_n[n].append((p, fmean(evals) * p / (n * math.log(n))))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for n, pts in sorted(by_n.items()):
        ax.plot([p for p, _ in pts], [v for _, v in pts], marker="o", label=f"n={n}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("distortion probability p")
    ax.set_ylabel("mean evaluations * p / (n ln n)")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_comparison(records, out_path) -> None:
    """Median evaluations against n, one line per algorithm.

    Adds the n ln n / p guide curve computed from the p stored on each
    dimension's records.  Censored trials enter at their recorded counts.
    """
    groups = defaultdict(list)
    p_of_n = {}
    for r in records:
        groups[(r.algorithm, r.n)].append(r.evaluations)
        p_of_n[r.n] = r.p
    by_algo = defaultdict(list)
    for (algo, n), evals in sorted(groups.items()):
        by_algo[algo].append((n, median(evals)))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for algo, pts in sorted(by_algo.items()):
        ax.plot([n for n, _ in pts], [v for _, v in pts], marker="o", label=algo)
    ref_ns = sorted(p_of_n)
    ax.plot(
        ref_ns,
        [n * math.log(n) / p_of_n[n] for n in ref_ns],
        linestyle="--",
        color="black",
        label="n ln n / p",
    )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("dimension n")
    ax.set_ylabel("median evaluations")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)
