#!/usr/bin/env python3
"""Exact theta for the subset-intersection family, against its closed form.

The graph on 3-subsets of [n] (adjacent when the intersection is odd)
admits an exact rational LP for theta.  This script solves it for a range
of n and checks the closed form n(n-2)(2n-11) / (3(3n-14)) digit for
digit.  At n = 8 the graph also has minrank = alpha = 8 over GF(2), so
all three parameters collapse to 8 there: the LP, the incidence
certificate, and the exact search all agree.
"""

from hfrac import alpha, johnson, johnson_certificate, theta_johnson_lp
from hfrac.theta import johnson_theta_formula


def main():
    print(f"{'n':>4} {'LP value':>12} {'formula':>12} {'float':>10}")
    for n in (8, 10, 12, 14, 16, 18, 20):
        lp_value = theta_johnson_lp(2, n)
        formula = johnson_theta_formula(n)
        assert lp_value == formula
        print(f"{n:>4} {str(lp_value):>12} {str(formula):>12} {float(lp_value):>10.4f}")

    print("\nn = 8 in detail (4 divides 8, so every bound collapses):")
    g = johnson(2, 8)
    cert = johnson_certificate(2, 8)
    a, _ = alpha(g)
    print(f"  graph: {g.n} vertices, {g.m} edges")
    print(f"  alpha = {a}")
    print(f"  incidence certificate rank = {cert.claimed_rank} "
          f"(verified: {cert.check(g)})")
    print(f"  theta = {theta_johnson_lp(2, 8)}")
    assert a == cert.claimed_rank == theta_johnson_lp(2, 8) == 8


if __name__ == "__main__":
    main()
