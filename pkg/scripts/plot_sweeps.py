#!/usr/bin/env python3
"""Plot sweep CSVs produced by `bcsample sweep`.

Produces three figures per input file: c vs mean sample count, c vs mean
factor difference, and sample count vs 1/factor-difference.

Usage:
    python scripts/plot_sweeps.py sweep_vertex.csv [sweep_pair.csv ...] --out figs/
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path


def read_sweep(path):
    rows = []
    with open(path, newline="") as fh:
        lines = [l for l in fh if not l.startswith("#")]
    for row in csv.DictReader(lines):
        rows.append({k: float(v) for k, v in row.items()})
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csvs", nargs="+")
    parser.add_argument("--out", default=".", help="output directory for PNGs")
    args = parser.parse_args()

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    panels = [
        ("c", "mean_k", "c", "# samples", "c_vs_samples"),
        ("c", "mean_factor_diff", "c", "factor difference", "c_vs_factor_diff"),
        ("mean_k", "inv_factor_diff", "# samples", "1 / factor difference", "samples_vs_inv_factor"),
    ]
    for xkey, ykey, xlabel, ylabel, stem in panels:
        fig, ax = plt.subplots(figsize=(4.5, 3.2))
        for path in args.csvs:
            rows = read_sweep(path)
            ax.plot([r[xkey] for r in rows], [r[ykey] for r in rows], marker="o", label=Path(path).stem)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.legend(fontsize=8)
        fig.tight_layout()
        target = outdir / f"{stem}.png"
        fig.savefig(target, dpi=150)
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
