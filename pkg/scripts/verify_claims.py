#!/usr/bin/env python3
"""Run every numerical verification suite and exit nonzero on failure.

Equivalent to `gftrl verify` with no arguments; kept as a script so the
whole check is one command from a fresh checkout.
"""

import sys

from gftrl.cli import main as gftrl_main

if __name__ == "__main__":
    sys.exit(gftrl_main(["verify"] + sys.argv[1:]))
