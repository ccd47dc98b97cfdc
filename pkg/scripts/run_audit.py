#!/usr/bin/env python3
"""Run the full claims audit over a genus range and write verdicts to stdout.

Equivalent to `jacring audit`, kept as a standalone script for experiment
runs; pass --json to get the machine-readable report.
"""

import sys

from jacring.cli import main

if __name__ == "__main__":
    sys.exit(main(["audit", *sys.argv[1:]]))
