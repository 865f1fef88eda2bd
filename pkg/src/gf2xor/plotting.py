"""Figure rendering for table reports.

Renders a per-polynomial bar chart of minimal XOR-counts next to the
delimited output. Imports matplotlib lazily and forces the Agg backend
so report generation works headless.
"""

from __future__ import annotations

from .tables import TableRow

_WEIGHT_COLORS = {3: "#2a7fb8", 5: "#e08214"}
_FALLBACK_COLOR = "#777777"
_MISS_COLOR = "#b2182b"


def render_table_figure(rows: list[TableRow], t_max: int, path: str) -> None:
    """Save a bar chart of min XOR-count per polynomial to path.

    Polynomials beyond t_max are drawn hatched at height t_max + 1 and
    labeled ">t_max". Bars are colored by polynomial weight.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Patch

    labels = [str(r.poly) for r in rows]
    heights = [
        r.min_xor_count if r.min_xor_count is not None else t_max + 1 for r in rows
    ]
    colors = [_WEIGHT_COLORS.get(r.weight, _FALLBACK_COLOR) for r in rows]
    hatches = ["//" if r.min_xor_count is None else "" for r in rows]

    fig, ax = plt.subplots(figsize=(max(6.0, 0.45 * len(rows) + 2.0), 4.0))
    bars = ax.bar(range(len(rows)), heights, color=colors, edgecolor="black")
    for bar, hatch, r in zip(bars, hatches, rows):
        bar.set_hatch(hatch)
        if r.min_xor_count is None:
            bar.set_facecolor(_MISS_COLOR)
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_yticks(range(t_max + 2))
    ax.set_yticklabels([str(t) for t in range(t_max + 1)] + [f">{t_max}"])
    ax.set_ylabel("minimal XOR-count")
    degree = rows[0].degree if rows else 0
    ax.set_title(f"Constant multiplication cost, degree {degree} (t_max = {t_max})")
    legend = [
        Patch(facecolor=_WEIGHT_COLORS[3], label="weight 3"),
        Patch(facecolor=_WEIGHT_COLORS[5], label="weight 5"),
        Patch(facecolor=_FALLBACK_COLOR, label="weight > 5"),
        Patch(facecolor=_MISS_COLOR, hatch="//", label=f"count > {t_max}"),
    ]
    ax.legend(handles=legend, fontsize=7, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
