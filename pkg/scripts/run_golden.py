#!/usr/bin/env python
"""Replay the worked integer examples and exit nonzero on any mismatch."""
import sys

from hyperlab.cli import classify_cli

if __name__ == "__main__":
    argv = ["golden"] + sys.argv[1:]
    sys.exit(classify_cli(argv))
