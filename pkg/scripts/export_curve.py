#!/usr/bin/env python3
"""Export the uniqueness boundary curve x(d, y) for d = 2 and 3 as CSV files."""

import argparse
import pathlib

from beg_dobrushin.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="curves", help="output directory")
    parser.add_argument("--y-min", type=float, default=-5.0)
    parser.add_argument("--y-max", type=float, default=4.0)
    parser.add_argument("--steps", type=int, default=361)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for d in (2, 3):
        path = out_dir / f"curve_d{d}.csv"
        cli_main([
            "curve", "-d", str(d),
            "--y-min", str(args.y_min), "--y-max", str(args.y_max),
            "--steps", str(args.steps),
            "-o", str(path),
        ])
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
