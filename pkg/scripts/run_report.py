#!/usr/bin/env python3
"""Produce the full verification report (same as `zomo report`).

Usage: python3 scripts/run_report.py [json|markdown] [outfile]
"""

import sys

from zomo import cli


def main():
    fmt = sys.argv[1] if len(sys.argv) > 1 else "markdown"
    argv = ["report", "--format", fmt]
    if len(sys.argv) > 2:
        argv += ["--out", sys.argv[2]]
    return cli.main(argv)


if __name__ == "__main__":
    sys.exit(main())
