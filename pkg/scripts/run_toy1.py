#!/usr/bin/env python3
"""Run toy experiment 1: a 6-node AR(2) network with a redundancy triad at
28 Hz and a synergy triad at 16 Hz. Writes the time series, the per-frequency
measure table, and SVG plots, then prints the sign checks."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hoicov.cli import main  # noqa: E402

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--outdir", default="out/toy1")
    parser.add_argument("--epochs", type=int, default=100)
    parser.add_argument("--samples", type=int, default=256)
    args = parser.parse_args()
    sys.exit(main([
        "toy", "1", "--seed", str(args.seed), "--outdir", args.outdir,
        "--epochs", str(args.epochs), "--samples", str(args.samples),
    ]))
