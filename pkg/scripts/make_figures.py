#!/usr/bin/env python3
"""Render the standard SVG figures: the singular function and Takagi pair,
the first construction steps of the family, and the graph of K."""

import argparse
import os

from okamoto_k.cli import main as cli_main


def run(outdir: str) -> None:
    os.makedirs(outdir, exist_ok=True)
    jobs = [
        (["eval", "--fn", "lebesgue", "--a", "0.3333333333333333",
          "--samples", "2001", "--format", "svg"], "lebesgue_a13.svg"),
        (["eval", "--fn", "takagi", "--samples", "2001", "--format", "svg"],
         "takagi.svg"),
        (["construct", "--a", "5/6", "--level", "1", "--format", "svg"],
         "construction_f1.svg"),
        (["construct", "--a", "5/6", "--level", "2", "--format", "svg"],
         "construction_f2.svg"),
        (["eval", "--fn", "K", "--samples", "6001", "--format", "svg"],
         "k_graph.svg"),
    ]
    for argv, name in jobs:
        path = os.path.join(outdir, name)
        code = cli_main(argv + ["--output", path])
        if code != 0:
            raise SystemExit(code)
        print(f"wrote {path}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out/figures")
    run(parser.parse_args().outdir)
