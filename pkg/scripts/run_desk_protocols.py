#!/usr/bin/env python3
"""Produce every desk-scale CSV under results/ (minutes, single machine).

Runs the four preset protocols: the (m, n) phase diagram, the per-weight
regret series at m = 10, the horizon scaling study, and the simplex
trajectories. Pass --threads N to spread grid cells over N processes.
"""

import argparse
import pathlib
import sys

from gftrl.cli import main as gftrl_main

ROOT = pathlib.Path(__file__).resolve().parent.parent


def run(argv) -> None:
    print("+ gftrl " + " ".join(argv))
    rc = gftrl_main(argv)
    if rc != 0:
        sys.exit(rc)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()
    threads = ["--threads", str(args.threads)]
    cfg = ROOT / "configs"

    run(["sweep", "--config", str(cfg / "phase_desk.cfg"), *threads])
    run(["sweep", "--config", str(cfg / "sato_phase_desk.cfg"), *threads])
    run(["series", "--config", str(cfg / "series_desk.cfg"),
         "--n-list", "1,3,5,7,9,11,13,15", *threads])
    run(["scaling", "--config", str(cfg / "scaling.cfg"), *threads])
    run(["trajectory", "--config", str(cfg / "trajectory.cfg"),
         "--n-list", "3,4,5,6", *threads])
    print("desk CSVs written under results/")


if __name__ == "__main__":
    main()
