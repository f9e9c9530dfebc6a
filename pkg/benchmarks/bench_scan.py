#!/usr/bin/env python3
"""Compare the compiled scan core against the pure-Python fallback.

Builds a leading-run code, then runs the full expansion-candidate scan over
Z_q^n once with each implementation and reports wall times. Both runs must
return identical results or the script aborts.
"""

import argparse
import time

from crossbifix import _scan_py
from crossbifix.codes import _scan_tables
from crossbifix.constructions import build_s_classic

try:
    from crossbifix import _scan
except ImportError:
    _scan = None


def scan_once(impl, q, n, tables):
    members, pre, suf = tables
    t0 = time.perf_counter()
    found, examined = impl.find_candidates(q, n, members, pre, suf, 0, 0)
    return time.perf_counter() - t0, found, examined


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2, help="alphabet size")
    parser.add_argument("--n", type=int, nargs="*", default=[14, 16, 18],
                        help="word lengths to scan")
    parser.add_argument("--k", type=int, help="leading-run length (default n-3)")
    args = parser.parse_args()
    if _scan is None:
        parser.error("compiled core is not built; install the package first")
    print(f"{'n':>4} {'k':>4} {'q**n':>10} {'|code|':>7} "
          f"{'python':>10} {'cython':>10} {'speedup':>8}")
    for n in args.n:
        k = args.k if args.k is not None else n - 3
        code = build_s_classic(args.q, n, k, guard=args.q ** n)
        tables = _scan_tables(code)
        t_py, found_py, seen_py = scan_once(_scan_py, args.q, n, tables)
        t_cy, found_cy, seen_cy = scan_once(_scan, args.q, n, tables)
        if (found_py, seen_py) != (found_cy, seen_cy):
            raise SystemExit(f"implementations disagree at n={n}")
        print(f"{n:>4} {k:>4} {args.q ** n:>10} {len(code):>7} "
              f"{t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
