#!/usr/bin/env python3
"""The coset decomposition of the DFT, step by step on Z_6 with H = {0, 3}.

A signal on G restricts to translated slices on the cosets of H.  Each
character eta of H turns those slices into a descended function F_eta on G/H;
transforming F_eta over the quotient and redistributing the values along the
character classes eta_lift * H_perp reassembles the full spectrum exactly.
"""

import random

from fourier_uncertainty import (
    build_section,
    coset_dft,
    descend,
    dft,
    make_group,
    quotient,
    random_rational_signal,
    subgroup_of_order,
)


def main() -> None:
    g = make_group([6])
    h = subgroup_of_order(g, 2)
    section = build_section(g, h)
    quot = quotient(g, h)

    rng = random.Random(6)
    f = random_rational_signal(g, rng)
    print("signal on Z_6:", [str(v) for v in f.values])
    print("subgroup H:", h.elements, " quotient factors:", quot.quotient_group.factor_orders)
    print("section lifts (one per character of H):", section.representatives)
    print()

    for eta in section.representatives:
        f_eta = descend(f, h, eta, section)
        print(f"descended F_eta for lift {eta}:", [str(v) for v in f_eta.values])

    direct = dft(f)
    via_cosets = coset_dft(f, h, section)
    print()
    print("direct spectrum:  ", [str(v) for v in direct.values])
    print("coset-assembled:  ", [str(v) for v in via_cosets.values])
    print("entrywise equal:  ", direct.values == via_cosets.values)


if __name__ == "__main__":
    main()
