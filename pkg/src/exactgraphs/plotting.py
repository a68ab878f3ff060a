"""Figures for analysis reports.

Uses the Agg backend so figures can be written from headless runs.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

KIND_COLORS = {"A": "tab:blue", "L": "tab:green", "Q": "tab:red"}
BOUND_LABELS = {
    "laplacian": r"$\frac{n}{4}\mu_1$",
    "q_lower_form": r"$W-\frac{n}{4}q_n$",
    "a_form": r"$\frac{W}{2}-\frac{n}{4}\lambda_n$",
    "spread_A": r"$\frac{n}{4}s_A$",
    "spread_Q": r"$\frac{n}{4}s_Q$",
}


def plot_report(report, path, width=10.0):
    """Write a two-panel figure: the three spectra, and the max cut against its bounds.

    ``report`` is the dictionary returned by :func:`exactgraphs.report.analyze`.
    """
    fig, (ax_spec, ax_cut) = plt.subplots(1, 2, figsize=(width, width * 0.4))

    for offset, kind in zip((-0.2, 0.0, 0.2), "ALQ"):
        vals = report["spectra"][kind]
        idx = [i + 1 + offset for i in range(len(vals))]
        exact = report["exactness"][kind]["is_exact"]
        label = f"{kind}" + (" (exact)" if exact else "")
        ax_spec.scatter(idx, vals, s=18, color=KIND_COLORS[kind], label=label)
    ax_spec.axhline(0.0, color="0.7", lw=0.8, zorder=0)
    ax_spec.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax_spec.set_xlabel("position $i$ (descending)")
    ax_spec.set_ylabel("eigenvalue")
    ax_spec.set_title("spectra")
    ax_spec.legend(frameon=False, fontsize=8)

    bounds = report["cut"]["bounds"]
    names = list(BOUND_LABELS)
    values = [bounds[k] for k in names]
    ax_cut.bar(range(len(names)), values, color="0.75")
    ax_cut.axhline(report["cut"]["mcut"], color="k", lw=1.2, ls="--", label="mcut")
    ax_cut.set_xticks(range(len(names)))
    ax_cut.set_xticklabels([BOUND_LABELS[k] for k in names], fontsize=9)
    ax_cut.set_title("maximum cut and upper bounds")
    ax_cut.legend(frameon=False, fontsize=8)

    g = report["graph"]
    fig.suptitle(f"n = {g['n']}, m = {g['m']}, W = {g['W']}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
