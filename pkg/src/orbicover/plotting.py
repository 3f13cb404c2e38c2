"""Figures written next to JSON reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dynamics import TorusMap, TorusPoint, involution_classify, periodic_points  # noqa: E402


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    # fixed metadata keeps the files reproducible
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_fixed_points(t: TorusMap, k: int, selected: list[list[str]], path: Path) -> Path:
    """Fixed points of ``t^k`` in the unit square; the chosen pairs are ringed."""
    _, pts = periodic_points(t, k)
    fixed, pairs = involution_classify(pts)
    fig, ax = plt.subplots(figsize=(5, 5))
    paired = [p for pr in pairs for p in pr]
    ax.scatter([float(p.x) for p in paired], [float(p.y) for p in paired], s=18, c="0.4", label="pairs {p, -p}")
    ax.scatter([float(p.x) for p in fixed], [float(p.y) for p in fixed], s=40, marker="s", c="tab:blue",
               label="2-torsion")
    labels = ("a1", "a2", "b1", "b2")
    chosen = [TorusPoint.parse(s) for pr in selected for s in pr]
    for lab, p in zip(labels, chosen):
        ax.scatter([float(p.x)], [float(p.y)], s=160, facecolors="none", edgecolors="tab:red")
        ax.annotate(lab, (float(p.x), float(p.y)), xytext=(5, 5), textcoords="offset points", color="tab:red")
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.05, 1.05)
    ax.set_aspect("equal")
    ax.set_title(f"Fix(A^{k}), A = [{t}]  ({len(pts)} points)")
    ax.legend(loc="upper right", fontsize=8)
    return _save(fig, path)


def plot_tower(report: dict, path: Path) -> Path:
    """Genus of each surface and degree of each cover in a tower report."""
    sigs = report["tower"]["signatures"]
    covers = report["tower"]["covers"]
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 4))
    names = list(sigs)
    genera = [int(sigs[k].split("(")[1].split(";")[0]) for k in names]
    left.bar(names, genera, color="tab:blue")
    left.set_title("genus")
    keys = list(covers)
    degrees = [covers[k]["degree"] for k in keys]
    colors = ["tab:green" if covers[k]["regular"] else "tab:orange" for k in keys]
    right.bar(keys, degrees, color=colors)
    right.set_title("degree (green: regular)")
    right.tick_params(axis="x", rotation=45)
    fig.suptitle(f"(m, n) = ({report['m']}, {report['n']})")
    return _save(fig, path)


def plot_grid(report: dict, path: Path) -> Path:
    """Pass/fail of each grid row with the genus of ``S_g`` written in."""
    rows = report["rows"]
    fig, ax = plt.subplots(figsize=(6, 4))
    if rows:
        ms = sorted({r["m"] for r in rows})
        ns = sorted({r["n"] for r in rows})
        grid = [[float("nan")] * len(ns) for _ in ms]
        for r in rows:
            grid[ms.index(r["m"])][ns.index(r["n"])] = 1.0 if r["passed"] else 0.0
            ax.text(ns.index(r["n"]), ms.index(r["m"]), r["genus"], ha="center", va="center", fontsize=7)
        ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1)
        ax.set_xticks(range(len(ns)), [str(n) for n in ns])
        ax.set_yticks(range(len(ms)), [str(m) for m in ms])
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    ax.set_title("grid verdicts (green pass, red fail)")
    return _save(fig, path)


def render(report: dict, out: Path) -> list[Path]:
    """Figures for a report, named after the JSON file ``out``."""
    stem = out.with_suffix("")
    written = []
    cmd = report["command"]
    if cmd in ("build", "verify"):
        written.append(plot_tower(report, Path(f"{stem}_tower.png")))
    if cmd == "verify":
        dyn = report["dynamics"]
        written.append(plot_fixed_points(TorusMap.parse(dyn["matrix"]), dyn["power"], dyn["selected_pairs"],
                                         Path(f"{stem}_fixed_points.png")))
    if cmd == "grid":
        written.append(plot_grid(report, Path(f"{stem}_grid.png")))
    return written

