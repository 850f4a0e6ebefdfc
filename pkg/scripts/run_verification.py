#!/usr/bin/env python3
"""Run the identity verifier from the command line.

Thin wrapper over ``nektau verify``; all flags are forwarded unchanged.
Example:

    python scripts/run_verification.py --id NY --order 2 --report out.json
"""

import sys

from nektau.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
