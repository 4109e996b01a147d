"""Figure rendering for report output.

Renders summary figures next to the JSON/CSV output of the ``check``
and ``corpus run`` paths: the two polynomials side by side and the
per-component structure. Uses the Agg backend so it works headless.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402


def polynomial_figure(report: dict, path: str) -> str:
    """Bar chart of Clar-cover vs induced-cube counts per degree."""
    zz = report.get("zz", [])
    cube = report.get("cube", [])
    deg = max(len(zz), len(cube), 1)
    ks = np.arange(deg)
    zzv = np.array([zz[k] if k < len(zz) else 0 for k in range(deg)])
    cbv = np.array([cube[k] if k < len(cube) else 0 for k in range(deg)])

    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * deg), 3.2))
    width = 0.38
    ax.bar(ks - width / 2, zzv, width, label="Clar covers", color="#31688e")
    ax.bar(ks + width / 2, cbv, width, label="induced cubes", color="#35b779")
    ax.set_xticks(ks)
    ax.set_xlabel("degree k")
    ax.set_ylabel("count")
    title = report.get("instance") or "instance"
    equal = report.get("equivalence", {}).get("equal")
    ax.set_title(f"{title}: polynomials {'agree' if equal else 'DIFFER'}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def component_figure(report: dict, path: str) -> str:
    """Component sizes and hypercube dimensions of the resonance graph."""
    comps = report.get("components", [])
    if not comps:
        comps = [{"id": 0, "vertices": 0, "dimension": 0}]
    ids = [c["id"] for c in comps]
    sizes = [c["vertices"] for c in comps]
    dims = [c["dimension"] for c in comps]

    fig, (ax1, ax2) = plt.subplots(
        1, 2, figsize=(max(5.0, 0.5 * len(comps) + 4), 3.2))
    ax1.bar(ids, sizes, color="#440154")
    ax1.set_xlabel("component")
    ax1.set_ylabel("matchings")
    ax1.set_title("component sizes")
    ax2.bar(ids, dims, color="#fde725", edgecolor="#808080")
    ax2.set_xlabel("component")
    ax2.set_ylabel("dimension k")
    ax2.set_title("cube dimensions")
    title = report.get("instance") or "instance"
    fig.suptitle(f"{title}: resonance components")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report_figures(report: dict, out_dir: str,
                          stem: str | None = None) -> list[str]:
    """Write the figures for one report; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    if stem is None:
        stem = report.get("instance") or "report"
        if report.get("face_set", {}).get("name"):
            stem += "-" + report["face_set"]["name"]
    stem = stem.replace("/", "-")
    paths = [
        polynomial_figure(report, os.path.join(out_dir, f"{stem}-polynomials.png")),
        component_figure(report, os.path.join(out_dir, f"{stem}-components.png")),
    ]
    return paths
