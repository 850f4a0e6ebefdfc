#!/usr/bin/env python3
"""Dump an assembled series as deterministic JSON.

Thin wrapper over ``nektau dump``; all flags are forwarded unchanged.
Example:

    python scripts/dump_series.py tau4d:kiev --order 2 --report tau.json
"""

import sys

from nektau.cli import main

if __name__ == "__main__":
    sys.exit(main(["dump", *sys.argv[1:]]))
