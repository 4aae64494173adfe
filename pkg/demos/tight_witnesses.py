#!/usr/bin/env python3
"""Functions attaining the uncertainty bounds.

On Z_p the sum |supp(f)| + |supp(fhat)| = p + 1 is attained for every k by
solving for a k-point function whose transform vanishes on k - 1 chosen
characters (possible because no square submatrix of the prime-order DFT
matrix is singular).  On any group, subgroup indicators modulated by a
character attain the classical product equality |supp(f)| |supp(fhat)| = n.
"""

from fourier_uncertainty import (
    dft,
    extremal_subgroup_function,
    make_group,
    subgroup_of_order,
    support,
    tao_tight_construct,
)


def main() -> None:
    p = 7
    print(f"tight witnesses on Z_{p}: support sizes (k, p + 1 - k)")
    for k in range(1, p + 1):
        f = tao_tight_construct(p, k)
        print(f"  k = {k}: |supp f| = {len(support(f))}, |supp fhat| = {len(support(dft(f)))}")
    print()

    g = make_group([2, 6])
    print(f"classical equality on Z_2 x Z_6 (order {g.order}):")
    for d in (1, 2, 3, 4, 6, 12):
        h = subgroup_of_order(g, d)
        f = extremal_subgroup_function(g, h, g.identity())
        s, c = len(support(f)), len(support(dft(f)))
        print(f"  |H| = {d:>2}: supports ({s}, {c}), product {s * c}")


if __name__ == "__main__":
    main()
