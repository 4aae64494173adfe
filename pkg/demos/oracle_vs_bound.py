#!/usr/bin/env python3
"""Brute-force minimal spectral support versus the divisor bound.

theta(G, k) is computed by exhaustive search with exact cyclotomic rank
tests, then compared with ceil(u(n, k)).  The bound is always attained at
divisors, but off divisors it can be strict: every group of order 8 has
theta(G, 3) = 4 > 3 = ceil(u(8, 3)), and Z_10 shows slack at k = 3 and
k = 4.  Orders 11 and 12 take a few minutes; use the CLI `verify-main`
command for those.
"""

from fourier_uncertainty import abelian_groups_of_order, theta_oracle, u_bound


def main() -> None:
    for order in (8, 10):
        for g in abelian_groups_of_order(order):
            name = " x ".join(f"Z_{m}" for m in g.factor_orders)
            print(f"{name} (order {order}):")
            print(f"  {'k':>3} {'theta':>6} {'u(n,k)':>8} {'ceil':>5}  status")
            for k in range(1, order + 1):
                w = theta_oracle(g, k)
                b = u_bound(order, k)
                status = "tight" if w.theta == b.ceiling else "slack"
                print(
                    f"  {k:>3} {w.theta:>6} {str(b.value):>8} {b.ceiling:>5}  {status}"
                )
            print()


if __name__ == "__main__":
    main()
