"""Batch runs over seeded instances: one CSV row per run plus summary figures."""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, List, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .cover import side_bound  # noqa: E402
from .instances import random_disjoint_polygons  # noqa: E402
from .oracle import verify_certificate  # noqa: E402
from .pipeline import required_guarantee, solve  # noqa: E402
from .separator import pigeonhole_bound  # noqa: E402


@dataclass
class RunRow:
    n: int
    seed: int
    vertices: int
    cover_sides: Optional[int]
    side_bound: Optional[int]
    degree: Optional[int]
    pigeonhole: Optional[int]
    guarantee: int
    required: int
    verified: Optional[bool]
    seconds: float


def run_batch(n_values: Iterable[int], seeds: Iterable[int], verify: bool = True, threads: int = 1, **gen) -> List[RunRow]:
    rows = []
    seeds = list(seeds)
    for n in n_values:
        for seed in seeds:
            inst = random_disjoint_polygons(n, seed, **gen)
            t0 = time.perf_counter()
            cert = solve(inst.sets)
            ok = verify_certificate(inst, cert, threads=threads).passed if verify else None
            cover, sep = cert.cover, cert.separator
            rows.append(
                RunRow(
                    n=n,
                    seed=seed,
                    vertices=sum(len(s) for s in inst.sets),
                    cover_sides=cover.total_sides if cover else None,
                    side_bound=side_bound(n) if n >= 3 else None,
                    degree=sep.degree if sep else None,
                    pigeonhole=pigeonhole_bound(n, sep.m) if sep else None,
                    guarantee=cert.guarantee,
                    required=required_guarantee(n),
                    verified=ok,
                    seconds=round(time.perf_counter() - t0, 3),
                )
            )
    return rows


def write_csv(rows: List[RunRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(RunRow.__dataclass_fields__))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in asdict(row).items()})


def _style_axes(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.grid(alpha=0.3, linewidth=0.5)


def plot_cover_sides(rows: List[RunRow], path: Path) -> None:
    pts = [(r.n, r.cover_sides) for r in rows if r.cover_sides is not None]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    if pts:
        ns = sorted({n for n, _ in pts})
        ax.scatter(*zip(*pts), s=12, color="#4c72b0", label="cover sides")
        ax.plot(ns, [side_bound(n) for n in ns], color="#c44e52", label="9n - 9")
    ax.set_xlabel("number of sets n")
    ax.set_ylabel("total sides")
    ax.legend(frameon=False)
    _style_axes(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_guarantees(rows: List[RunRow], path: Path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    if rows:
        ns = sorted({r.n for r in rows})
        ax.scatter([r.n for r in rows], [r.guarantee for r in rows], s=12, color="#55a868", label="guarantee")
        ax.scatter(
            [r.n for r in rows if r.degree is not None],
            [r.degree for r in rows if r.degree is not None],
            s=10,
            marker="x",
            color="#8172b3",
            label="selected line degree",
        )
        ax.step(ns, [required_guarantee(n) for n in ns], where="mid", color="#c44e52", label="ceil(n/18)")
    ax.set_xlabel("number of sets n")
    ax.set_ylabel("sets split off")
    ax.legend(frameon=False)
    _style_axes(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(rows: List[RunRow], outdir: Path) -> List[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [outdir / "report.csv", outdir / "cover_sides.png", outdir / "guarantee.png"]
    write_csv(rows, paths[0])
    plot_cover_sides(rows, paths[1])
    plot_guarantees(rows, paths[2])
    return paths
