"""Finite abelian groups as products of cyclic factors.

Elements and character labels are coordinate tuples; the enumeration order is
mixed-radix lexicographic (last coordinate fastest), so index 0 is always the
identity / trivial character.  The dual group reuses the same coordinates via
the standard self-pairing; `char_pairing` returns the exponent e with
chi(x) = zeta_N^e, N the group exponent.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

Element = tuple[int, ...]  # element coordinates; also used for character labels

__all__ = [
    "Element",
    "GroupSpec",
    "Subgroup",
    "QuotientDescriptor",
    "make_group",
    "parse_group_spec",
    "format_group_spec",
    "char_pairing",
    "subgroup_of_order",
    "subgroup_from_elements",
    "subgroup_generated",
    "subgroup_as_group",
    "annihilator",
    "quotient",
    "abelian_groups_of_order",
]


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by an ordered list of cyclic factor orders."""

    factor_orders: tuple[int, ...]
    order: int
    exponent: int

    def identity(self) -> Element:
        return (0,) * len(self.factor_orders)

    def validate(self, x: Element) -> None:
        if len(x) != len(self.factor_orders):
            raise ValueError(f"element {x} has wrong arity for factors {self.factor_orders}")
        for c, m in zip(x, self.factor_orders):
            if not 0 <= c < m:
                raise ValueError(f"coordinate {c} out of range for factor of order {m}")

    def add(self, a: Element, b: Element) -> Element:
        self.validate(a)
        self.validate(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factor_orders))

    def neg(self, a: Element) -> Element:
        self.validate(a)
        return tuple((-x) % m for x, m in zip(a, self.factor_orders))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: Element) -> Element:
        self.validate(a)
        return tuple((c * x) % m for x, m in zip(a, self.factor_orders))

    def index(self, x: Element) -> int:
        self.validate(x)
        idx = 0
        for c, m in zip(x, self.factor_orders):
            idx = idx * m + c
        return idx

    def element(self, idx: int) -> Element:
        if not 0 <= idx < self.order:
            raise ValueError(f"element index {idx} out of range for order {self.order}")
        coords = []
        for m in reversed(self.factor_orders):
            coords.append(idx % m)
            idx //= m
        return tuple(reversed(coords))

    def elements(self) -> Iterator[Element]:
        return iproduct(*(range(m) for m in self.factor_orders))

    def element_order(self, x: Element) -> int:
        self.validate(x)
        o = 1
        for c, m in zip(x, self.factor_orders):
            o = _lcm(o, m // math.gcd(c, m))
        return o


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def make_group(factor_orders: Sequence[int]) -> GroupSpec:
    """Build a GroupSpec; factors are kept in the given order, not normalized."""
    factors = tuple(int(m) for m in factor_orders)
    if not factors:
        raise ValueError("factor list must be nonempty")
    if any(m < 1 for m in factors):
        raise ValueError(f"factor orders must be >= 1, got {factors}")
    order = math.prod(factors)
    exponent = reduce(_lcm, factors, 1)
    return GroupSpec(factors, order, exponent)


_GROUP_RE = re.compile(r"^z?\s*(\d+)$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse "4,3" or "Z4xZ3" (case-insensitive, 'x' separator) into a GroupSpec."""
    body = text.strip().lower()
    parts = re.split(r"[x,]", body) if body else []
    factors = []
    for part in parts:
        m = _GROUP_RE.match(part.strip())
        if not m:
            raise ValueError(f"cannot parse group spec {text!r}")
        factors.append(int(m.group(1)))
    if not factors:
        raise ValueError(f"cannot parse group spec {text!r}")
    return make_group(factors)


def format_group_spec(group: GroupSpec) -> str:
    return ",".join(str(m) for m in group.factor_orders)


def char_pairing(group: GroupSpec, chi: Element, x: Element) -> int:
    """Exponent e in [0, N) with chi(x) = zeta_N^e, N the group exponent."""
    group.validate(chi)
    group.validate(x)
    n_exp = group.exponent
    e = 0
    for c, a, m in zip(chi, x, group.factor_orders):
        e += c * a * (n_exp // m)
    return e % n_exp


@lru_cache(maxsize=None)
def pairing_matrix(group: GroupSpec, negate: bool = False) -> tuple[tuple[int, ...], ...]:
    """Table of pairing exponents e(chi, x) (or e(chi, -x)) by enumeration index."""
    elems = [group.element(i) for i in range(group.order)]
    rows = []
    for chi in elems:
        if negate:
            rows.append(tuple(char_pairing(group, chi, group.neg(x)) for x in elems))
        else:
            rows.append(tuple(char_pairing(group, chi, x) for x in elems))
    return tuple(rows)


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    parent: GroupSpec
    generators: tuple[Element, ...]
    elements: tuple[Element, ...]  # sorted by parent enumeration index
    order: int

    def contains(self, x: Element) -> bool:
        return x in self.elements


def _close_under_addition(group: GroupSpec, gens: Iterable[Element]) -> tuple[Element, ...]:
    seen = {group.identity()}
    frontier = [group.identity()]
    gens = list(gens)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = group.add(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return tuple(sorted(seen, key=group.index))


def subgroup_generated(group: GroupSpec, gens: Iterable[Element]) -> Subgroup:
    gens = tuple(gens)
    for g in gens:
        group.validate(g)
    elems = _close_under_addition(group, gens)
    return Subgroup(group, gens, elems, len(elems))


def subgroup_from_elements(group: GroupSpec, elems: Iterable[Element]) -> Subgroup:
    """Wrap an explicit element set, verifying it actually is a subgroup."""
    elems = tuple(sorted(set(elems), key=group.index))
    elem_set = set(elems)
    if group.identity() not in elem_set:
        raise ValueError("subgroup must contain the identity")
    for a in elems:
        if group.neg(a) not in elem_set:
            raise ValueError(f"element set not closed under negation at {a}")
        for b in elems:
            if group.add(a, b) not in elem_set:
                raise ValueError(f"element set not closed under addition at {a}+{b}")
    return Subgroup(group, elems, elems, len(elems))


@lru_cache(maxsize=None)
def subgroup_of_order(group: GroupSpec, d: int) -> Subgroup:
    """The deterministic subgroup of order d.

    Each prime power of d is distributed greedily across the factors in index
    order; within a factor Z_m the subgroup of order c is generated by m/c.
    """
    if d < 1 or group.order % d != 0:
        raise ValueError(f"no subgroup of order {d} in a group of order {group.order}")
    remaining = _factorize(d)
    capacities = [_factorize(m) for m in group.factor_orders]
    taken = [dict() for _ in group.factor_orders]
    for p in sorted(remaining):
        need = remaining[p]
        for i, cap in enumerate(capacities):
            if need == 0:
                break
            have = cap.get(p, 0)
            use = min(need, have)
            if use:
                taken[i][p] = use
                need -= use
        assert need == 0, "divisor capacity exhausted despite d | n"
    orders = [math.prod(p**e for p, e in t.items()) for t in taken]
    gens = []
    for i, (c, m) in enumerate(zip(orders, group.factor_orders)):
        if c > 1:
            g = [0] * len(group.factor_orders)
            g[i] = m // c
            gens.append(tuple(g))
    coords = [range(0, m, m // c) for c, m in zip(orders, group.factor_orders)]
    elems = tuple(sorted(iproduct(*coords), key=group.index))
    assert len(elems) == d
    return Subgroup(group, tuple(gens), elems, d)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def annihilator(group: GroupSpec, sub: Subgroup) -> Subgroup:
    """H^perp: all character labels trivial on H.  |H^perp| * |H| = |G|."""
    if sub.parent != group:
        raise ValueError("subgroup belongs to a different group")
    gens = sub.generators if sub.generators else sub.elements
    labels = [
        chi
        for chi in group.elements()
        if all(char_pairing(group, chi, h) == 0 for h in gens)
    ]
    labels = tuple(sorted(labels, key=group.index))
    return Subgroup(group, labels, labels, len(labels))


def subgroup_as_group(sub: Subgroup) -> GroupSpec:
    """The abstract structure of H as an invariant-factor GroupSpec.

    Recovered from order statistics: for each prime p, the counts
    #{h in H : p^j h = 0} determine the partition type of the p-part.
    """
    n = sub.order
    if n == 1:
        return make_group([1])
    parent = sub.parent
    parts_by_prime: dict[int, list[int]] = {}
    for p, e_total in sorted(_factorize(n).items()):
        conj = []
        prev = 1
        j = 1
        while True:
            cnt = sum(1 for h in sub.elements if all(c * p**j % m == 0 for c, m in zip(h, parent.factor_orders)))
            step = cnt // prev
            if step == 1:
                break
            conj.append(_int_log(step, p))
            prev = cnt
            j += 1
        # conj is the conjugate partition; transpose it
        parts = []
        for i in range(1, max(conj) + 1):
            parts.append(sum(1 for c in conj if c >= i))
        parts_by_prime[p] = sorted(parts, reverse=True)
    width = max(len(v) for v in parts_by_prime.values())
    invariants = []
    for i in range(width):
        d = 1
        for p, parts in parts_by_prime.items():
            if i < len(parts):
                d *= p ** parts[i]
        invariants.append(d)
    return make_group(sorted(invariants))


def _int_log(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    assert n == 1, "count ratio is not a prime power"
    return e


# ---------------------------------------------------------------------------
# quotients via Smith normal form


class QuotientDescriptor:
    """G/H with an explicit projection and the H^perp -> dual(G/H) transport."""

    def __init__(self, parent: GroupSpec, sub: Subgroup):
        self.parent = parent
        self.subgroup = sub
        rank = len(parent.factor_orders)
        cols: list[list[int]] = [
            [parent.factor_orders[i] if j == i else 0 for i in range(rank)]
            for j in range(rank)
        ]
        cols.extend([list(h) for h in sub.elements])
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(rank)]
        diag, left = _smith_with_left(matrix)
        self._diag = diag
        self._left = left
        self._kept = [i for i, d in enumerate(diag) if d > 1]
        factors = [diag[i] for i in self._kept] or [1]
        self.quotient_group = make_group(factors)
        assert self.quotient_group.order * sub.order == parent.order
        left_inv = _int_matrix_inverse(left)
        self._preimages = []
        for pos, i in enumerate(self._kept):
            col = [left_inv[r][i] % parent.factor_orders[r] for r in range(rank)]
            self._preimages.append(tuple(col))
        if not self._kept:
            self._preimages = []
        reps = []
        seen = set()
        for x in self.parent.elements():
            q = self.project(x)
            if q not in seen:
                seen.add(q)
                reps.append(x)
            if len(reps) == self.quotient_group.order:
                break
        self.coset_reps = tuple(reps)

    def project(self, x: Element) -> Element:
        """The image of x in G/H, as quotient-group coordinates."""
        self.parent.validate(x)
        vals = [sum(self._left[i][j] * x[j] for j in range(len(x))) for i in range(len(x))]
        if not self._kept:
            return (0,)
        return tuple(vals[i] % self._diag[i] for i in self._kept)

    def transport_char(self, lam: Element) -> Element:
        """lambda in H^perp -> lambda' on G/H with lambda'(y+H) = lambda(y)."""
        n_exp = self.parent.exponent
        if not self._kept:
            return (0,)
        coords = []
        for pos, i in enumerate(self._kept):
            d = self._diag[i]
            e = char_pairing(self.parent, lam, self._preimages[pos])
            step = n_exp // d
            if e % step != 0:
                raise ValueError(f"label {lam} is not in the annihilator of the subgroup")
            coords.append((e // step) % d)
        return tuple(coords)


@lru_cache(maxsize=None)
def quotient(group: GroupSpec, sub: Subgroup) -> QuotientDescriptor:
    if sub.parent != group:
        raise ValueError("subgroup belongs to a different group")
    return QuotientDescriptor(group, sub)


def _smith_with_left(matrix: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Diagonalize M over Z: returns (diag, U) with U*M*V diagonal, U unimodular.

    Only the left transform is tracked; the diagonal satisfies d1 | d2 | ...
    """
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def row_sub(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def col_sub(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]

    t = 0
    while t < min(m, n):
        # pick the nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_sub(i, t, q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_sub(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
        # enforce divisibility of the trailing block by a[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_sub(t, offender, -1)  # add offending row; redo clearing
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = [a[i][i] if i < n else 0 for i in range(m)]
    return diag, u


def _int_matrix_inverse(mat: list[list[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix (entries stay integral)."""
    size = len(mat)
    work = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(size)] for i, row in enumerate(mat)]
    for c in range(size):
        piv = next(r for r in range(c, size) if work[r][c] != 0)
        work[c], work[piv] = work[piv], work[c]
        inv = 1 / work[c][c]
        work[c] = [v * inv for v in work[c]]
        for r in range(size):
            if r != c and work[r][c] != 0:
                f = work[r][c]
                work[r] = [v - f * w for v, w in zip(work[r], work[c])]
    out = []
    for row in work:
        vals = row[size:]
        assert all(v.denominator == 1 for v in vals), "matrix is not unimodular"
        out.append([int(v) for v in vals])
    return out


# ---------------------------------------------------------------------------
# isomorphism-class enumeration (used by verification sweeps)


def abelian_groups_of_order(n: int) -> list[GroupSpec]:
    """All abelian groups of order n, one GroupSpec per isomorphism class.

    Each class is written in invariant-factor form d1 | d2 | ... (ascending).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return [make_group([1])]
    per_prime = []
    for p, e in sorted(_factorize(n).items()):
        per_prime.append([(p, part) for part in _partitions(e)])
    groups = []
    for combo in iproduct(*per_prime):
        width = max(len(part) for _, part in combo)
        invariants = []
        for i in range(width):
            d = 1
            for p, part in combo:
                if i < len(part):
                    d *= p ** part[i]
            invariants.append(d)
        groups.append(make_group(sorted(invariants)))
    return sorted(groups, key=lambda g: g.factor_orders)


def _partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in weakly decreasing order."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out
