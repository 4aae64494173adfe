"""Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra.

Values live in the power basis 1, zeta, ..., zeta^(phi(N)-1) of Q[x]/Phi_N(x),
stored as integer coordinate vectors over a single positive denominator.  The
quotient by Phi_N (rather than x^N - 1) keeps the representation a field, so
`is_zero` is canonical and support counts of Fourier transforms are decided
exactly, never numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Cyc",
    "ExactMatrix",
    "cyclotomic_polynomial",
    "euler_phi_degree",
    "zeta_pow",
    "exact_kernel",
    "mat_vec",
]


# ---------------------------------------------------------------------------
# integer polynomials (dense coefficient lists, index = degree)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic integer polynomial; exact over Z."""
    num = list(num)
    dd = len(den) - 1
    if dd == 0:
        return num, []
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, computed by dividing x^n - 1 by all Phi_d, d | n, d < n."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    poly: list[int] = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d == n:
            continue
        poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
        assert not rem, f"Phi_{d} does not divide x^{n} - 1"
    return tuple(poly)


def euler_phi_degree(n: int) -> int:
    """phi(n) as the degree of Phi_n."""
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of x^m mod Phi_n for 0 <= m <= n + phi(n) - 2.

    Row m doubles as the coordinates of zeta_n^m; the range covers every
    exponent that a product of two reduced elements, or a reduced element
    shifted by zeta^e with e < n, can reach.
    """
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    top = max(n + deg - 1, 2 * deg - 1, 1)
    rows: list[tuple[int, ...]] = []
    for m in range(top):
        if m < deg:
            row = [0] * deg
            row[m] = 1
        else:
            prev = rows[m - 1]
            carry = prev[deg - 1]
            row = [0] * deg
            for i in range(1, deg):
                row[i] = prev[i - 1] - carry * phi_poly[i]
            row[0] = -carry * phi_poly[0]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce_product(n: int, conv: list[int]) -> list[int]:
    """Reduce a raw convolution (degree may exceed phi-1) mod Phi_n."""
    rows = _reduction_rows(n)
    deg = len(rows[0])
    out = conv[:deg] + [0] * (deg - len(conv))
    for m in range(deg, len(conv)):
        c = conv[m]
        if c:
            row = rows[m]
            for i in range(deg):
                out[i] += c * row[i]
    return out[:deg]


# ---------------------------------------------------------------------------
# field elements


class Cyc:
    """An element of Q(zeta_N): integer coordinates `num` over denominator `den`.

    Canonical form: den > 0 and gcd(den, content(num)) == 1.  Equality is
    structural, which the canonical form makes semantic.
    """

    __slots__ = ("modulus", "num", "den")

    def __init__(self, modulus: int, coeffs: Iterable[Fraction | int], den: int = 1):
        deg = euler_phi_degree(modulus)
        nums = [0] * deg
        common = den
        items = list(coeffs)
        if len(items) > deg:
            raise ValueError(f"expected at most {deg} coordinates for modulus {modulus}")
        for c in items:
            if isinstance(c, Fraction):
                common = common * c.denominator // math.gcd(common, c.denominator)
        for i, c in enumerate(items):
            if isinstance(c, Fraction):
                nums[i] = c.numerator * (common // c.denominator)
            else:
                nums[i] = c * (common // den)
        self.modulus = modulus
        self.num, self.den = _canonical(nums, common)

    @classmethod
    def _make(cls, modulus: int, num: tuple[int, ...], den: int) -> "Cyc":
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, modulus: int) -> "Cyc":
        return cls._make(modulus, (0,) * euler_phi_degree(modulus), 1)

    @classmethod
    def one(cls, modulus: int) -> "Cyc":
        deg = euler_phi_degree(modulus)
        return cls._make(modulus, (1,) + (0,) * (deg - 1), 1)

    @classmethod
    def from_rational(cls, modulus: int, value: Fraction | int) -> "Cyc":
        q = Fraction(value)
        deg = euler_phi_degree(modulus)
        return cls._make(modulus, (q.numerator,) + (0,) * (deg - 1), q.denominator)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def _check(self, other: "Cyc") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"incompatible cyclotomic fields: Q(zeta_{self.modulus}) vs Q(zeta_{other.modulus})"
            )

    def __add__(self, other):
        other = _lift(self.modulus, other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        g = math.gcd(self.den, other.den)
        la, lb = other.den // g, self.den // g
        num = [a * la + b * lb for a, b in zip(self.num, other.num)]
        return Cyc._make(self.modulus, *_canonical(num, self.den * la))

    def __sub__(self, other):
        other = _lift(self.modulus, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(self.modulus, other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    __radd__ = __add__

    def __neg__(self):
        return Cyc._make(self.modulus, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyc._make(
                self.modulus,
                *_canonical([c * q.numerator for c in self.num], self.den * q.denominator),
            )
        if not isinstance(other, Cyc):
            return NotImplemented
        self._check(other)
        conv = _poly_mul(self.num, other.num)
        if not conv:
            return Cyc.zero(self.modulus)
        num = _reduce_product(self.modulus, conv)
        return Cyc._make(self.modulus, *_canonical(num, self.den * other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in Q(zeta_{self.modulus})")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.modulus)]
        a = [Fraction(c, self.den) for c in self.num]
        s = _xgcd_inverse(a, phi_poly)
        deg = euler_phi_degree(self.modulus)
        s += [Fraction(0)] * (deg - len(s))
        return Cyc(self.modulus, s[:deg])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(q.denominator, q.numerator)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        out = Cyc.one(self.modulus)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(self.modulus, other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.modulus, self.num, self.den))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc({self.modulus}: {body})"


def _canonical(num: list[int] | tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g > 1:
        return tuple(c // g for c in num), den // g
    return tuple(num), den


def _lift(modulus: int, value) -> "Cyc":
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc.from_rational(modulus, value)
    return NotImplemented


def _xgcd_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """s with s*a == 1 (mod `mod`), for `mod` irreducible and a nonzero."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_frac(num, den):
        num = num[:]
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        while len(num) >= len(den) and trim(num):
            shift = len(num) - len(den)
            coef = num[-1] / den[-1]
            q[shift] = coef
            for i, d in enumerate(den):
                num[shift + i] -= coef * d
            trim(num)
        return q, num

    r0, r1 = mod[:], trim(a[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while trim(r1):
        q, r = divmod_frac(r0, r1)
        conv = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    conv[i + j] += qi * sj
        s_new = [Fraction(0)] * max(len(s0), len(conv))
        for i, c in enumerate(s0):
            s_new[i] += c
        for i, c in enumerate(conv):
            s_new[i] -= c
        r0, r1 = r1, r
        s0, s1 = s1, trim(s_new)
    # r0 is a nonzero constant gcd (mod irreducible): scale s0 by 1/r0
    c = r0[0]
    return [si / c for si in s0]


def zeta_pow(modulus: int, exponent: int) -> Cyc:
    """zeta_N^e reduced mod Phi_N."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    row = _reduction_rows(modulus)[exponent % modulus]
    return Cyc._make(modulus, row, 1)


# ---------------------------------------------------------------------------
# exact linear algebra


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular matrix of Cyc entries sharing one modulus."""

    entries: tuple[tuple[Cyc, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        modulus = self.entries[0][0].modulus
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for e in row:
                if e.modulus != modulus:
                    raise ValueError("matrix entries must share one cyclotomic modulus")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cyc]]) -> "ExactMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def modulus(self) -> int:
        return self.entries[0][0].modulus


def exact_kernel(matrix: ExactMatrix) -> tuple[int, list[tuple[Cyc, ...]]]:
    """Exact rank and right-kernel basis over Q(zeta_N).

    Forward elimination is division-deferred (cross-multiplication only),
    with pivots chosen as the first nonzero entry in column order, so the
    echelon form and the returned basis are reproducible.  Divisions happen
    only in back-substitution.  Basis vectors are in free-column canonical
    form: vector j has 1 at the j-th free column and 0 at the others.
    """
    n_rows, n_cols = matrix.rows, matrix.cols
    zero = Cyc.zero(matrix.modulus)
    one = Cyc.one(matrix.modulus)
    work = [list(row) for row in matrix.entries]

    pivots: list[tuple[int, int]] = []  # (row index in echelon order, column)
    pr = 0
    for c in range(n_cols):
        pivot_row = None
        for r in range(pr, n_rows):
            if not work[r][c].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            work[pr], work[pivot_row] = work[pivot_row], work[pr]
        piv = work[pr][c]
        for r in range(pr + 1, n_rows):
            lead = work[r][c]
            if lead.is_zero():
                continue
            row = work[r]
            prow = work[pr]
            for j in range(c, n_cols):
                row[j] = piv * row[j] - lead * prow[j]
        pivots.append((pr, c))
        pr += 1
        if pr == n_rows:
            break

    rank = len(pivots)
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]

    basis: list[tuple[Cyc, ...]] = []
    inv_cache: dict[int, Cyc] = {}
    for fc in free_cols:
        vec = [zero] * n_cols
        vec[fc] = one
        for pr_i, pc in reversed(pivots):
            row = work[pr_i]
            acc = zero
            for j in range(pc + 1, n_cols):
                if not vec[j].is_zero() and not row[j].is_zero():
                    acc = acc + row[j] * vec[j]
            if acc.is_zero():
                continue
            if pc not in inv_cache:
                inv_cache[pc] = row[pc].inverse()
            vec[pc] = -acc * inv_cache[pc]
        basis.append(tuple(vec))

    return rank, basis


def mat_vec(matrix: ExactMatrix, vec: Sequence[Cyc]) -> list[Cyc]:
    if len(vec) != matrix.cols:
        raise ValueError("vector length must match column count")
    out = []
    for row in matrix.entries:
        acc = Cyc.zero(matrix.modulus)
        for e, v in zip(row, vec):
            if not e.is_zero() and not v.is_zero():
                acc = acc + e * v
        out.append(acc)
    return out
