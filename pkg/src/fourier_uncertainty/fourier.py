"""The discrete Fourier transform on a finite abelian group, exactly.

Signals and spectra hold Cyc values; `dft` is the direct O(n^2) sum
fhat(chi) = sum_x f(x) chi(-x) with chi(x) realized as a power of zeta_N.
`coset_dft` recomputes the same spectrum through a subgroup H: translated
restrictions of f are transformed on H, descend to functions on G/H, and the
quotient transforms are redistributed over the character classes of H.  The
two paths agree entrywise, which is the identity the descent construction
certifies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclo import Cyc, zeta_pow
from .groups import (
    Element,
    GroupSpec,
    Subgroup,
    annihilator,
    char_pairing,
    pairing_matrix,
    quotient,
)

__all__ = [
    "Signal",
    "Spectrum",
    "SectionMap",
    "signal_from_rationals",
    "signal_from_json",
    "delta_signal",
    "indicator_signal",
    "random_rational_signal",
    "dft",
    "idft",
    "support",
    "translate",
    "modulate",
    "build_section",
    "descend",
    "coset_dft",
]


@dataclass(frozen=True)
class Signal:
    """An exact-valued function on group elements, in enumeration order.

    Values live in Q(zeta_M) for a single modulus M that the group exponent
    divides; M can exceed the exponent so that coset descent through a
    subgroup stays inside the parent group's field.
    """

    group: GroupSpec
    values: tuple[Cyc, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise ValueError(
                f"expected {self.group.order} values, got {len(self.values)}"
            )
        m = self.values[0].modulus
        if any(v.modulus != m for v in self.values):
            raise ValueError("signal values must share one cyclotomic modulus")
        if m % self.group.exponent != 0:
            raise ValueError(
                f"modulus {m} incompatible with group exponent {self.group.exponent}"
            )

    @property
    def modulus(self) -> int:
        return self.values[0].modulus

    def value_at(self, x: Element) -> Cyc:
        return self.values[self.group.index(x)]


@dataclass(frozen=True)
class Spectrum(Signal):
    """An exact-valued function on character labels, in enumeration order."""


def _lift_values(group: GroupSpec, values: Iterable, modulus: int | None) -> tuple[Cyc, ...]:
    m = modulus if modulus is not None else group.exponent
    out = []
    for v in values:
        if isinstance(v, Cyc):
            out.append(v)
        else:
            out.append(Cyc.from_rational(m, Fraction(v)))
    return tuple(out)


def signal_from_rationals(group: GroupSpec, values: Sequence, modulus: int | None = None) -> Signal:
    return Signal(group, _lift_values(group, values, modulus))


def signal_from_json(group: GroupSpec, text: str, modulus: int | None = None) -> Signal:
    """Parse the signal literal format: a JSON array in element enumeration order.

    Each entry is a rational string ("3/2", "-1", "0") or an array of rational
    strings giving power-basis coordinates of a cyclotomic value.
    """
    import json

    m = modulus if modulus is not None else group.exponent
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("signal literal must be a JSON array")
    values = []
    for entry in data:
        if isinstance(entry, list):
            values.append(Cyc(m, [Fraction(c) for c in entry]))
        else:
            values.append(Cyc.from_rational(m, Fraction(entry)))
    return Signal(group, tuple(values))


def delta_signal(group: GroupSpec, x: Element | None = None, modulus: int | None = None) -> Signal:
    x = x if x is not None else group.identity()
    m = modulus if modulus is not None else group.exponent
    vals = [Cyc.zero(m)] * group.order
    vals[group.index(x)] = Cyc.one(m)
    return Signal(group, tuple(vals))


def indicator_signal(group: GroupSpec, elements: Iterable[Element], modulus: int | None = None) -> Signal:
    m = modulus if modulus is not None else group.exponent
    vals = [Cyc.zero(m)] * group.order
    for x in elements:
        vals[group.index(x)] = Cyc.one(m)
    return Signal(group, tuple(vals))


def random_rational_signal(
    group: GroupSpec,
    rng: random.Random,
    max_numerator: int = 9,
    max_denominator: int = 4,
    zero_weight: float = 0.4,
) -> Signal:
    """A nonzero signal with small random rational values (for property checks)."""
    while True:
        vals = []
        for _ in range(group.order):
            if rng.random() < zero_weight:
                vals.append(Fraction(0))
            else:
                num = rng.randint(-max_numerator, max_numerator)
                den = rng.randint(1, max_denominator)
                vals.append(Fraction(num, den))
        if any(vals):
            return signal_from_rationals(group, vals)


# ---------------------------------------------------------------------------
# transforms


def _zeta_table(modulus: int) -> list[Cyc]:
    return [zeta_pow(modulus, e) for e in range(modulus)]


def dft(f: Signal) -> Spectrum:
    """fhat(chi) = sum_x f(x) chi(-x), exact in Q(zeta_M)."""
    group = f.group
    m = f.modulus
    scale = m // group.exponent
    zp = _zeta_table(m)
    pneg = pairing_matrix(group, True)
    out = []
    for ci in range(group.order):
        row = pneg[ci]
        acc = Cyc.zero(m)
        for xi in range(group.order):
            v = f.values[xi]
            if not v.is_zero():
                acc = acc + v * zp[(row[xi] * scale) % m]
        out.append(acc)
    return Spectrum(group, tuple(out))


def idft(spec: Spectrum) -> Signal:
    """f(x) = (1/n) sum_chi F(chi) chi(x); exact inverse of dft."""
    group = spec.group
    m = spec.modulus
    scale = m // group.exponent
    zp = _zeta_table(m)
    ppos = pairing_matrix(group, False)
    inv_n = Fraction(1, group.order)
    out = []
    for xi in range(group.order):
        acc = Cyc.zero(m)
        for ci in range(group.order):
            v = spec.values[ci]
            if not v.is_zero():
                acc = acc + v * zp[(ppos[ci][xi] * scale) % m]
        out.append(acc * inv_n)
    return Signal(group, tuple(out))


def support(f: Signal) -> tuple[int, ...]:
    """Sorted indices where the exact zero test fails."""
    return tuple(i for i, v in enumerate(f.values) if not v.is_zero())


def translate(f: Signal, y: Element) -> Signal:
    """f_y(z) = f(z + y)."""
    group = f.group
    vals = [f.values[group.index(group.add(group.element(i), y))] for i in range(group.order)]
    return Signal(group, tuple(vals))


def modulate(f: Signal, chi: Element) -> Signal:
    """Pointwise multiplication by the character chi."""
    group = f.group
    m = f.modulus
    scale = m // group.exponent
    vals = []
    for i in range(group.order):
        v = f.values[i]
        if v.is_zero():
            vals.append(v)
        else:
            e = char_pairing(group, chi, group.element(i))
            vals.append(v * zeta_pow(m, e * scale))
    return Signal(group, tuple(vals))


# ---------------------------------------------------------------------------
# coset decomposition of the transform


class SectionMap:
    """For each character of H, a fixed character of G restricting to it.

    Characters of H are keyed by their value table on H's elements (pairing
    exponents), since restriction to H is what defines them.  The chosen
    representative is the label minimal in enumeration order, so the section
    is deterministic.
    """

    def __init__(self, group: GroupSpec, sub: Subgroup):
        self.group = group
        self.subgroup = sub
        classes: dict[tuple[int, ...], Element] = {}
        for chi in group.elements():
            key = tuple(char_pairing(group, chi, h) for h in sub.elements)
            if key not in classes:
                classes[key] = chi
        if len(classes) != sub.order:
            raise ValueError("restriction classes do not match the subgroup order")
        self._by_key = classes
        self.representatives = tuple(
            sorted(classes.values(), key=group.index)
        )

    def restriction_key(self, chi: Element) -> tuple[int, ...]:
        return tuple(char_pairing(self.group, chi, h) for h in self.subgroup.elements)

    def representative(self, chi: Element) -> Element:
        """The section's lift of the restriction of chi."""
        return self._by_key[self.restriction_key(chi)]


def build_section(group: GroupSpec, sub: Subgroup) -> SectionMap:
    if sub.parent != group:
        raise ValueError("subgroup belongs to a different group")
    return SectionMap(group, sub)


def _check_section(f: Signal, sub: Subgroup, section: SectionMap) -> None:
    if section.subgroup != sub or section.group != f.group:
        raise ValueError("section map is inconsistent with the given subgroup")


def descend(f: Signal, sub: Subgroup, eta: Element, section: SectionMap) -> Signal:
    """The function F_eta on G/H with F_eta(y+H) = fhat_y(eta) * eta_lift(-y).

    `eta` is any character label of G; only its restriction to H enters, and
    the lift eta_lift is the section's representative of that restriction.
    The result does not depend on the choice of coset representatives.
    """
    group = f.group
    _check_section(f, sub, section)
    group.validate(eta)
    m = f.modulus
    scale = m // group.exponent
    lift = section.representative(eta)
    quot = quotient(group, sub)
    vals = [Cyc.zero(m)] * quot.quotient_group.order
    for y in quot.coset_reps:
        # fhat_y(eta) = sum_{z in H} f(z + y) eta(-z)
        acc = Cyc.zero(m)
        for z in sub.elements:
            v = f.value_at(group.add(z, y))
            if not v.is_zero():
                e = char_pairing(group, eta, group.neg(z))
                acc = acc + v * zeta_pow(m, e * scale)
        if not acc.is_zero():
            e_lift = char_pairing(group, lift, group.neg(y))
            acc = acc * zeta_pow(m, e_lift * scale)
        vals[quot.quotient_group.index(quot.project(y))] = acc
    return Signal(quot.quotient_group, tuple(vals))


def coset_dft(f: Signal, sub: Subgroup, section: SectionMap | None = None) -> Spectrum:
    """Assemble dft(f) through the coset decomposition of G over H.

    For each character class eta of H, the descended function F_eta is
    transformed on G/H and its values are placed at the labels eta_lift * lam
    with lam in H^perp, using the transport lam -> lam' to index the quotient
    spectrum.  Agrees with dft(f) entrywise.
    """
    group = f.group
    if section is None:
        section = build_section(group, sub)
    _check_section(f, sub, section)
    perp = annihilator(group, sub)
    quot = quotient(group, sub)
    out: list[Cyc | None] = [None] * group.order
    for lift in section.representatives:
        f_eta = descend(f, sub, lift, section)
        f_eta_hat = dft(f_eta)
        for lam in perp.elements:
            chi = group.add(lift, lam)
            lam_q = quot.transport_char(lam)
            value = f_eta_hat.values[quot.quotient_group.index(lam_q)]
            idx = group.index(chi)
            assert out[idx] is None, "character hit twice in coset assembly"
            out[idx] = value
    assert all(v is not None for v in out)
    return Spectrum(group, tuple(out))
