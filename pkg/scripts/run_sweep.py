#!/usr/bin/env python
"""Run the full default theorem sweep and write the structured report.

Equivalent to `hyperlab sweep --json --out sweep.jsonl` with the default
family; kept as a script so the default campaign is one command.
"""
import sys

from hyperlab.cli import classify_cli

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "sweep.jsonl"
    sys.exit(classify_cli(["sweep", "--json", "--out", out]))
