#!/usr/bin/env python3
"""Survey report: the cosine quintic, its roots, fold pairs, and the
single-fold constructibility table up to n = 31."""

import math

from hendecafold.cyclotomic import classify_constructible, halved_cyclotomic
from hendecafold.folds import TwoFoldConfig, solve_two_fold
from hendecafold.polynomials import isolate_real_roots, refine_root


def main() -> None:
    ngon = halved_cyclotomic(11)
    print("cosine polynomial for n = 11 (ascending):",
          [str(c) for c in ngon.poly.coeffs])

    intervals = isolate_real_roots(ngon.poly)
    print(f"\ncertified real roots: {len(intervals)}")
    for k, interval in enumerate(intervals, start=1):
        root = refine_root(ngon.poly, interval)
        trig = 2 * math.cos(2 * math.pi * (6 - k) / 11)
        print(f"  root {root:+.12f}   2cos(2pi*{6 - k}/11) = {trig:+.12f}   "
              f"delta {abs(root - trig):.1e}")

    print("\nfold pairs (descending t):")
    for sol in solve_two_fold(TwoFoldConfig.hendecagon()):
        print(f"  t = {sol.t:+.12f}  s = {sol.s:+.12f}  "
              f"worst residual {sol.max_residual:.1e}")

    print("\nsingle-fold constructibility, 3 <= n <= 31:")
    for n in range(3, 32):
        report = classify_constructible(n)
        tag = "yes" if report.single_fold_constructible else "NO "
        primes = " ".join(f"{w.prime}=2^{w.two_exp}*3^{w.three_exp}+1"
                          for w in report.pierpont_primes)
        parts = [f"2^{report.r}"] if report.r else []
        if report.s:
            parts.append(f"3^{report.s}")
        print(f"  n={n:>2}  {tag}  {' '.join(parts + [primes]).strip() or '-'}"
              + ("" if report.single_fold_constructible
                 else f"  ({'; '.join(report.obstructions)})"))


if __name__ == "__main__":
    main()
