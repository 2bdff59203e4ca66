"""Command line front end.

    wproj 1,2,2 --format json
    wproj 1,1 --verify all
    wproj --sweep 12

Exit codes: 0 all requested checks pass, 1 a verification failed, 2 invalid
input.
"""

from __future__ import annotations

import argparse
import sys
import time

from .report import render, run_report, run_sweep


def _parse_weights(text: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("weights must be a comma-separated list of integers,"
                         " got %r" % text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="wproj",
        description="Construct and verify the exact quantum-side and "
                    "mirror-side data of a weighted projective space.")
    parser.add_argument("weights", nargs="?",
                        help="comma-separated weights, e.g. 1,2,2")
    parser.add_argument("--format", choices=["json", "latex", "text"],
                        default="json", help="output format (default json)")
    parser.add_argument("--verify", default="all",
                        help="'all' or a comma-separated list of check-name "
                             "prefixes to run and report")
    parser.add_argument("--sweep", type=int, metavar="MU",
                        help="verify every weight vector with mu <= MU")
    parser.add_argument("--timings", action="store_true",
                        help="print wall-clock timings to stderr")
    args = parser.parse_args(argv)

    if (args.weights is None) == (args.sweep is None):
        parser.print_usage(sys.stderr)
        print("error: give either a weight vector or --sweep", file=sys.stderr)
        return 2

    try:
        if args.sweep is not None:
            start = time.perf_counter()
            doc, timings = run_sweep(args.sweep)
            elapsed = time.perf_counter() - start
            fmt = args.format if args.format != "latex" else "text"
            sys.stdout.write(render(doc, fmt))
            if args.timings:
                slowest = sorted(timings.items(), key=lambda kv: -kv[1])[:5]
                print("sweep took %.2fs; slowest: %s" %
                      (elapsed, ", ".join("%s %.2fs" % (w, t)
                                          for w, t in slowest)),
                      file=sys.stderr)
            return 0 if doc["all_ok"] else 1

        weights = _parse_weights(args.weights)
        check_filter = None
        if args.verify != "all":
            check_filter = tuple(p for p in args.verify.split(",") if p)
        start = time.perf_counter()
        doc = run_report(weights, check_filter)
        elapsed = time.perf_counter() - start
        sys.stdout.write(render(doc, args.format))
        if args.timings:
            print("report took %.2fs" % elapsed, file=sys.stderr)
        return 0 if doc["all_ok"] else 1
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
