"""Exact Lambert sums against their asymptotic expansion.

The residue-class Lambert series sum_{d = h (m)} q^d / (1 - q^d) with
q = exp(-alpha) can be summed exactly for any alpha > 0, but as alpha
shrinks the exact sum needs more terms while the asymptotic expansion in
alpha gets better.  The expansion is divergent, so it is truncated at its
smallest term; the magnitude of that term is the usual error proxy.  This
script tabulates both evaluations across a sweep of alpha and compares the
true error with the proxy.
"""

import mpmath as mp

from partsums import asymptotics

ALPHAS = ("0.5", "0.2", "0.1", "0.05", "0.02", "0.01")


def main():
    m, h = 3, 2
    print(f"residue class d = {h} (mod {m})")
    print(
        f"{'alpha':>7} {'exact':>20} {'asymptotic':>20} {'true err':>10}"
        f" {'proxy':>10} {'terms':>6}"
    )
    with mp.workdps(50):
        for alpha in ALPHAS:
            exact_value = asymptotics.lambert_tau_exact(alpha, m, h)
            series = asymptotics.lambert_tau_asymptotic(alpha, m, h)
            err = abs(exact_value - series.value)
            print(
                f"{alpha:>7} {mp.nstr(exact_value, 14):>20}"
                f" {mp.nstr(series.value, 14):>20}"
                f" {mp.nstr(err, 3):>10}"
                f" {mp.nstr(series.last_term_magnitude, 3):>10}"
                f" {series.terms_used:>6}"
            )
    print()
    print("the true error tracks the last retained term; both collapse as")
    print("alpha -> 0, which is the regime the expansion is built for")


if __name__ == "__main__":
    main()
