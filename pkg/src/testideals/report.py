"""Report rendering: jumping-number tables as CSV plus matplotlib figures.

The CLI `report` command lands here.  Everything written is deterministic:
a delimited table of the verified jumping numbers with the presentation at
each jump, a staircase figure of the jump counting function, and (in two
prime indices) a picture of the gamma polytope itself.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path

from . import engine, geometry

FIGSIZE = (6.4, 4.2)
DPI = 150


def _staircase_figure(jumps, lam_max, threshold, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [0.0] + [float(j) for j in jumps] + [float(lam_max)]
    ys = [0] + list(range(1, len(jumps) + 1)) + [len(jumps)]
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.step(xs, ys, where="post", color="#1f77b4", lw=1.8)
    for j in jumps:
        ax.axvline(float(j), color="#bbbbbb", lw=0.6, zorder=0)
    if threshold is not None:
        ax.axvline(float(threshold), color="#d62728", lw=1.2, ls="--",
                   label=f"threshold = {geometry.format_rational(threshold)}")
        ax.legend(loc="lower right", frameon=False)
    ax.set_xlabel("coefficient")
    ax.set_ylabel("jumps so far")
    ax.set_title("jumping numbers")
    ax.set_xlim(0, float(lam_max))
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)


def _polytope_figure(poly, weights, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=FIGSIZE)
    pts = [(float(v[0]), float(v[1])) for v in poly.vertices]
    if len(pts) >= 2:
        # vertices arrive lexicographically sorted; for the hull outline in
        # the plane, order them around the centroid
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        import math
        ordered = sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        ax.fill(
            [p[0] for p in ordered], [p[1] for p in ordered],
            alpha=0.25, color="#1f77b4", lw=0,
        )
        ax.plot(
            [p[0] for p in ordered] + [ordered[0][0]],
            [p[1] for p in ordered] + [ordered[0][1]],
            color="#1f77b4", lw=1.5,
        )
    ax.plot([p[0] for p in pts], [p[1] for p in pts], "o", color="#1f77b4")
    for v in poly.vertices:
        ax.annotate(
            f"({geometry.format_rational(v[0])}, {geometry.format_rational(v[1])})",
            (float(v[0]), float(v[1])),
            textcoords="offset points", xytext=(6, 4), fontsize=8,
        )
    ax.set_xlabel(f"gamma_1  (weight {weights[0]})")
    ax.set_ylabel(f"gamma_2  (weight {weights[1]})")
    ax.set_title("gamma polytope")
    ax.grid(alpha=0.3, lw=0.4)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)


def render_report(spec: engine.ProductIdealSpec, lam_max, out_dir,
                  guard=None) -> dict:
    """Write the jumping-number CSV and figures for one spec.

    Returns a manifest of the written files plus the headline numbers.
    """
    lam_max = Fraction(lam_max)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = engine.jumping_numbers_sum(spec, lam_max, guard=guard)
    try:
        threshold = engine.fpt(spec)
    except Exception:
        threshold = None

    from .contexts import heights

    rows = []
    for idx, lam in enumerate(report.jumps, start=1):
        pres = engine.test_ideal(spec, lam, guard=guard)
        rows.append({
            "index": idx,
            "lambda": geometry.format_rational(lam),
            "lambda_float": f"{float(lam):.6f}",
            "antichain": json.dumps([list(b) for b in pres.antichain]),
        })

    csv_path = out / "jumping_numbers.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["index", "lambda", "lambda_float", "antichain"]
        )
        writer.writeheader()
        writer.writerows(rows)

    files = [str(csv_path)]
    stairs_path = out / "jump_staircase.png"
    _staircase_figure(report.jumps, lam_max, threshold, stairs_path)
    files.append(str(stairs_path))

    if spec.context.k == 2:
        poly_path = out / "gamma_polytope.png"
        _polytope_figure(
            engine.gamma_polytope(spec), heights(spec.context), poly_path
        )
        files.append(str(poly_path))

    return {
        "files": files,
        "jumps": [geometry.format_rational(j) for j in report.jumps],
        "metadata": dict(report.metadata),
        **(
            {"fpt": geometry.format_rational(threshold)}
            if threshold is not None
            else {}
        ),
    }
