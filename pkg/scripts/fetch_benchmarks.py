#!/usr/bin/env python3
"""Stub for fetching the public TTP benchmark distance matrices.

The benchmark files (Galaxy, NFL, NL, Super, Brazil families) are
distributed by their maintainers and are not bundled here.  Download the
plain-text distance matrices yourself and drop them into data/benchmarks/
as <Name><n>.txt (for example data/benchmarks/Galaxy16.txt), each file
holding the n x n matrix in whitespace-separated rows, optionally preceded
by the team count.

Once the files are in place:

    pytest tests/test_acceptance.py -k criterion_09   # regression gate
    ttp2 bench data/benchmarks --rounds 50 --baseline data/baselines.csv

data/baselines.csv ships the reference totals the regression compares
against (lb, previous best, 50-round target).
"""

import sys
from pathlib import Path

TARGET = Path(__file__).resolve().parent.parent / "data" / "benchmarks"


def main() -> int:
    TARGET.mkdir(parents=True, exist_ok=True)
    present = sorted(p.name for p in TARGET.glob("*.txt"))
    if present:
        print(f"{len(present)} benchmark files present in {TARGET}:")
        for name in present:
            print(f"  {name}")
        return 0
    print(__doc__)
    print(f"(no files found in {TARGET})")
    return 1


if __name__ == "__main__":
    sys.exit(main())
