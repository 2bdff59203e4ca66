#!/usr/bin/env python3
"""Compare the two rational-arithmetic backends on the verification workload.

The package picks gmpy2's C rationals at import when available and falls
back to fractions.Fraction otherwise; WPROJ_PURE_PYTHON=1 forces the
fallback.  This script runs the same deterministic workload in a subprocess
per backend and reports wall-clock times, checking along the way that both
backends produce byte-identical reports.
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import hashlib, sys, time
from wproj._rat import BACKEND
from wproj.report import render_json, run_checks, run_report
from wproj.combinatorics import enumerate_weight_tuples

tuples = [w for w in enumerate_weight_tuples(10)]
start = time.perf_counter()
for w in tuples:
    _p, verdicts = run_checks(w)
    assert all(r.ok for r in verdicts.values()), w
elapsed = time.perf_counter() - start
sys.stdout.write("%s %.3f %d\n" % (BACKEND, elapsed, len(tuples)))
digest = hashlib.sha256(render_json(run_report((1, 2, 2))).encode()).hexdigest()
sys.stdout.write(digest + "\n")
"""


def run(pure: bool):
    env = dict(os.environ)
    if pure:
        env["WPROJ_PURE_PYTHON"] = "1"
    else:
        env.pop("WPROJ_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    line, digest = out.stdout.strip().splitlines()
    backend, seconds, count = line.split()
    return backend, float(seconds), int(count), digest


def main() -> int:
    fast = run(pure=False)
    slow = run(pure=True)
    print("workload: full verification of every weight vector with mu <= 10"
          " (%d tuples)" % fast[2])
    for backend, seconds, _count, _digest in (fast, slow):
        print("  %-10s %7.3f s" % (backend, seconds))
    if fast[0] == slow[0]:
        print("note: gmpy2 not installed, both runs used the fallback")
    else:
        print("  speedup    %7.2fx" % (slow[1] / fast[1]))
    if fast[3] != slow[3]:
        print("ERROR: backends disagree on the report bytes")
        return 1
    print("reports are byte-identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
