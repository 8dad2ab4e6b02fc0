#!/usr/bin/env python3
"""Run the four reproducible experiments and write their JSON reports."""

import argparse
import os

from okamoto_k.cli import main as cli_main


def run(outdir: str, seed: int) -> None:
    os.makedirs(outdir, exist_ok=True)
    jobs = [
        (["experiment", "box-dim", "--a", "2/3", "--levels", "8"],
         "box_dim_a23.json"),
        (["experiment", "walk-mc", "--samples", "10000", "--horizon", "10000",
          "--seed", str(seed)], "walk_mc.json"),
        (["experiment", "sigma-fuzz", "--trials", "10000", "--seed", str(seed)],
         "sigma_fuzz.json"),
        (["experiment", "hata-yamaguti", "--grid", "100"],
         "hata_yamaguti.json"),
    ]
    for argv, name in jobs:
        path = os.path.join(outdir, name)
        code = cli_main(argv + ["--output", path])
        if code != 0:
            raise SystemExit(code)
        print(f"wrote {path}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out/experiments")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    run(args.outdir, args.seed)
