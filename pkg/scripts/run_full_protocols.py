#!/usr/bin/env python3
"""Full-scale grids (T = 1e5, m up to 30, n up to 35). Expect roughly an
hour single-threaded; --threads N divides that by about N."""

import argparse
import pathlib
import sys

from gftrl.cli import main as gftrl_main

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()
    rc = gftrl_main(["sweep", "--config",
                     str(ROOT / "configs" / "phase_full.cfg"),
                     "--threads", str(args.threads)])
    sys.exit(rc)


if __name__ == "__main__":
    main()
