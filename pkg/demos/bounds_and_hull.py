#!/usr/bin/env python3
"""Tour of the divisor-interpolation bound u(n,k).

For each k between consecutive divisors d1 <= k <= d2 of n, the bound is the
linear interpolation of n/d between the hull vertices (d1, n/d1) and
(d2, n/d2).  At divisors it equals n/d exactly; off divisors it beats the
classical hyperbola n/k by a strict rational margin.
"""

from fractions import Fraction

from fourier_uncertainty import hull_points, nearest_divisors, u_bound


def show(n: int) -> None:
    hull = hull_points(n)
    print(f"n = {n}")
    print("  hull vertices (d, n/d):", " ".join(f"({d},{nd})" for d, nd in hull.vertices))
    print(f"  {'k':>3} {'d1':>3} {'d2':>3} {'u(n,k)':>8} {'ceil':>4} {'n/k':>8}  margin")
    for k in range(1, n + 1):
        b = u_bound(n, k)
        classical = Fraction(n, k)
        margin = b.value - classical
        tag = "divisor" if n % k == 0 else f"+{margin}"
        print(
            f"  {k:>3} {b.pair.d1:>3} {b.pair.d2:>3} {str(b.value):>8} {b.ceiling:>4} "
            f"{str(classical):>8}  {tag}"
        )
    print()


if __name__ == "__main__":
    show(12)
    show(36)
