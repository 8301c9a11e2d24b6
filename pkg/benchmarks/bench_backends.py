#!/usr/bin/env python3
"""Timing comparison of the two scalar backends.

The package selects gmpy2.mpq at import when available and falls back
to fractions.Fraction; CONVCHECK_PURE=1 forces the fallback.  Because
the choice happens at import time, each measurement runs in a fresh
interpreter.  The workload is a representative slice of the catalog:
convolution-heavy theorem checks plus one derived corollary in each
root family.
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import time
from convcheck._scalar import BACKEND
from convcheck.report import run_records, select_records

IDS = ["T2.1a", "T2.1b", "T3.1", "T3.7", "T4.2", "C2.1.1", "C4.3"]
t0 = time.perf_counter()
rows = run_records(select_records(IDS))
elapsed = time.perf_counter() - t0
bad = [r.record.key for r in rows if not r.passed and r.record.variant == "corrected"]
assert not bad, bad
print(f"{BACKEND}\t{elapsed:.3f}")
"""


def measure(pure: bool) -> str:
    env = dict(os.environ)
    if pure:
        env["CONVCHECK_PURE"] = "1"
    else:
        env.pop("CONVCHECK_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env,
        capture_output=True, text=True, check=True,
    )
    return proc.stdout.strip()


def main() -> None:
    fast = measure(pure=False)
    pure = measure(pure=True)
    print("backend\tseconds")
    print(fast)
    print(pure)
    if fast.split("\t")[0] == pure.split("\t")[0]:
        print("note: gmpy2 not importable here, both runs used the fallback")


if __name__ == "__main__":
    main()
