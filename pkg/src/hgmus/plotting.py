"""Figures for the benchmark harness.  Rendered off-screen to files."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_enumeration(rows, path):
    """MUS throughput and time to first MUS against the number of groups."""
    rows = [r for r in rows if r["muses"] > 0]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    groups = [r["groups"] for r in rows]
    ax1.scatter(groups, [r["mus_per_sec"] for r in rows], s=14, alpha=0.7)
    ax1.set_xlabel("groups")
    ax1.set_ylabel("MUSes / second")
    ax1.set_yscale("log")
    ax2.scatter(groups, [r["time_to_first_mus"] * 1e3 for r in rows],
                s=14, alpha=0.7, color="tab:orange")
    ax2.set_xlabel("groups")
    ax2.set_ylabel("time to first MUS (ms)")
    ax2.set_yscale("log")
    for ax in (ax1, ax2):
        ax.grid(True, alpha=0.3)
    _save(fig, path)


def plot_extraction(rows, path):
    """Propagation work of the two extractors as the number of groups grows."""
    fig, ax = plt.subplots(figsize=(5.5, 4))
    xs = [r["groups"] for r in rows]
    ax.loglog(xs, [r["insertion_work"] for r in rows], "o-", label="insertion")
    ax.loglog(xs, [r["deletion_work"] for r in rows], "s-", label="deletion")
    ax.set_xlabel("groups")
    ax.set_ylabel("LTUR literal visits")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    _save(fig, path)
