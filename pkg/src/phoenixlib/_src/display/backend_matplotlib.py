"""matplotlib backend"""

from matplotlib.figure import Figure


def plot_matplotlib(labels, counts, *, path, line=False, title="", xlabel=""):
    """Draw counts as a line (time series) or bar chart and save it to `path`."""
    # Figure directly, without pyplot
    fig = Figure(figsize=(max(6.0, 0.35 * len(labels)), 4.0))
    ax = fig.add_subplot()
    x = range(len(labels))
    if line:
        ax.plot(x, counts, marker="o")
    else:
        ax.bar(x, counts)
    ax.set_xticks(list(x), labels, rotation=60, ha="right", fontsize="small")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    return fig
