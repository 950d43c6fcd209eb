#!/usr/bin/env python
"""Write (x, g(x)) data for the moderate and large plotting ranges, and plot them.

Usage:
    python scripts/make_figures.py --outdir figures [--no-plot]

Produces g_moderate.csv (x in [-4, 4], 801 points) and g_large.csv
(x in [-1000, 1000], 2001 points) through the ``lambertg sweep`` command, so
the files are byte-identical to what the CLI emits.  PNGs need matplotlib.
"""
import argparse
import csv
import os

from lambertg.cli import PRESETS, main as cli_main


def write_sweep(preset, path):
    with open(path, "w", newline="") as fh:
        code = cli_main(["sweep", "--preset", preset], out=fh)
    if code != 0:
        raise SystemExit(code)
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    return [float(r["x"]) for r in rows], [float(r["y"]) for r in rows]


def plot(xs, ys, title, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.plot(xs, ys, lw=1.5)
    ax.axhline(0, color="0.6", lw=0.6)
    ax.axvline(0, color="0.6", lw=0.6)
    ax.set_xlabel("x")
    ax.set_ylabel("y = log(W(exp(x)))")
    ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="figures")
    parser.add_argument("--no-plot", action="store_true")
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    for preset in ("moderate", "large"):
        lo, hi, n = PRESETS[preset]
        csv_path = os.path.join(args.outdir, f"g_{preset}.csv")
        xs, ys = write_sweep(preset, csv_path)
        print(f"{csv_path}: {n} rows over [{lo:g}, {hi:g}]")
        if not args.no_plot:
            png = os.path.join(args.outdir, f"g_{preset}.png")
            plot(xs, ys, f"g(x) for {lo:g} < x < {hi:g}", png)
            print(f"{png}")
