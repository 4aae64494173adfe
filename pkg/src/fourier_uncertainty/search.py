"""Brute-force ground truth for minimal spectral support.

theta(G,k) is the minimum of |supp(fhat)| over nonzero f with |supp(f)| <= k.
The oracle enumerates supports S of size exactly k (monotonicity makes larger
supports redundant, and translation invariance lets the identity be pinned
into S) and, for each S, finds the largest zero set achievable by a nonzero
function supported in S.

A spectrum zero set T is achievable iff the DFT submatrix with rows T and
columns S has a nontrivial right kernel.  Scanning T by decreasing size is
equivalent to the closure scan used here: every maximal zero set has row rank
exactly |S| - 1, so it is the exact zero set of the kernel vector of any of
its (|S|-1)-subsets of independent rows.  Enumerating those basis subsets in
lexicographic order, solving the one-dimensional kernel, and extending to the
full zero set therefore finds the same maximal T (and the same witness) as
the descending scan, at C(n, |S|-1) rank tests per support.

All linear algebra runs over Z[zeta_N] with integer coordinates: matrix
entries are roots of unity, elimination is division-deferred cross-
multiplication with per-row content stripping, and divisions never occur.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .cyclo import Cyc, ExactMatrix, _reduction_rows, exact_kernel, zeta_pow
from .fourier import Signal, dft, support
from .groups import Element, GroupSpec, Subgroup, char_pairing, make_group, pairing_matrix

__all__ = [
    "BudgetExceeded",
    "SearchBudget",
    "ThetaWitness",
    "MinorCertificate",
    "min_cosupport",
    "theta_oracle",
    "chebotarev_check",
    "extremal_subgroup_function",
    "tao_tight_construct",
    "witness_json_dict",
]


class BudgetExceeded(RuntimeError):
    """Raised when a search would exceed its configured budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps on the combinatorial size of an oracle run.

    Defaults are tuned so that every abelian group of order <= 12 (and Z_13)
    completes; anything larger fails loudly instead of silently truncating.
    """

    max_support_sets: int = 10_000
    max_rank_tests: int = 2_000_000


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class ThetaWitness:
    group: GroupSpec
    k: int
    theta: int
    witness: Signal
    witness_support: tuple[int, ...]
    witness_cosupport_size: int


@dataclass(frozen=True)
class MinorCertificate:
    p: int
    checked: int
    first_singular: tuple[tuple[int, ...], tuple[int, ...]] | None


# ---------------------------------------------------------------------------
# integer-coordinate arithmetic in Z[zeta_N] (power basis, length deg)


def _mul_red(a: Sequence[int], b: Sequence[int], red, deg: int) -> list[int]:
    conv = [0] * (2 * deg - 1)
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    out = conv[:deg]
    for m in range(deg, 2 * deg - 1):
        c = conv[m]
        if c:
            row = red[m]
            for i in range(deg):
                out[i] += c * row[i]
    return out


def _strip_row(row: list[list[int]]) -> None:
    g = 0
    for poly in row:
        for c in poly:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    return
    if g > 1:
        for poly in row:
            for i, c in enumerate(poly):
                if c:
                    poly[i] = c // g


def _reduce_against(row: list[list[int]], echelon, red, deg: int) -> int | None:
    """Eliminate `row` against echelon rows (sorted by pivot column).

    Returns the new pivot column, or None if the row reduced to zero.
    Cross-multiplication only; `row` is modified in place.
    """
    width = len(row)
    for pivcol, erow in echelon:
        lead = row[pivcol]
        if not any(lead):
            continue
        piv = erow[pivcol]
        for j in range(width):
            ej = erow[j]
            if any(ej):
                row[j] = [
                    a - b for a, b in zip(_mul_red(piv, row[j], red, deg), _mul_red(lead, ej, red, deg))
                ]
            elif any(row[j]):
                row[j] = _mul_red(piv, row[j], red, deg)
        _strip_row(row)
    for j in range(width):
        if any(row[j]):
            return j
    return None


def _kernel_from_echelon(echelon, width: int, red, deg: int) -> list[list[int]]:
    """The 1-dim kernel of a rank (width-1) echelon, as integer polys."""
    pivcols = {pc for pc, _ in echelon}
    free = next(j for j in range(width) if j not in pivcols)
    one = [1] + [0] * (deg - 1)
    vec: list[list[int] | None] = [None] * width
    vec[free] = one
    for pivcol, erow in sorted(echelon, key=lambda pr: -pr[0]):
        acc = [0] * deg
        for j in range(pivcol + 1, width):
            vj = vec[j]
            if vj is not None and any(erow[j]):
                prod = _mul_red(erow[j], vj, red, deg)
                for i in range(deg):
                    acc[i] += prod[i]
        piv = erow[pivcol]
        for j in range(width):
            vj = vec[j]
            if vj is not None:
                vec[j] = _mul_red(piv, vj, red, deg)
        vec[pivcol] = [-c for c in acc]
    out = [v if v is not None else [0] * deg for v in vec]
    _strip_row(out)
    return out


def _spectrum_zero_mask(vec, col_exps, n: int, red, deg: int, skip_mask: int) -> int:
    """Bitmask of rows r where sum_j vec[j] * zeta^(col_exps[r][j]) == 0."""
    mask = 0
    for r in range(n):
        if (skip_mask >> r) & 1:
            continue
        exps = col_exps[r]
        buf = [0] * (len(red))
        for j, vj in enumerate(vec):
            e = exps[j]
            for i in range(deg):
                c = vj[i]
                if c:
                    buf[e + i] += c
        acc = [0] * deg
        for m, c in enumerate(buf):
            if c:
                row = red[m]
                for i in range(deg):
                    acc[i] += c * row[i]
        if not any(acc):
            mask |= 1 << r
    return mask


class _SupportScan:
    """Max zero-set search for one support S; shares echelon prefixes."""

    def __init__(self, group: GroupSpec, s_indices: tuple[int, ...]):
        self.n = group.order
        n_exp = group.exponent
        self.deg = len(_reduction_rows(n_exp)[0])
        self.red = _reduction_rows(n_exp)
        pneg = pairing_matrix(group, True)
        self.s = s_indices
        self.k = len(s_indices)
        # per row r: zeta exponents over the columns S, and reduced rows
        self.col_exps = [tuple(pneg[r][x] for x in s_indices) for r in range(self.n)]
        self.base_rows = [
            [list(self.red[e]) for e in self.col_exps[r]] for r in range(self.n)
        ]
        self.best_mask = 0
        self.best_size = -1
        self.best_zeros: tuple[int, ...] = ()
        self.best_vec: list[list[int]] | None = None
        self.closure_masks: list[int] = []
        self.tests = 0

    def run(self) -> None:
        target = self.k - 1
        if target == 0:
            self._leaf([], 0, ())
            return
        self._extend(0, [], 0, (), target)

    def _extend(self, start, echelon, t0_mask, t0, target) -> None:
        depth = len(t0)
        remaining = target - depth
        last = depth == target - 1
        for r in range(start, self.n - remaining + 1):
            mask = t0_mask | (1 << r)
            if last and any((mask & ~cm) == 0 for cm in self.closure_masks):
                continue
            row = [poly[:] for poly in self.base_rows[r]]
            piv = _reduce_against(row, echelon, self.red, self.deg)
            if piv is None:
                continue  # dependent row: no completion reaches full rank
            entry = (piv, row)
            new_ech = sorted(echelon + [entry], key=lambda pr: pr[0])
            if last:
                self._leaf(new_ech, mask, t0 + (r,))
            else:
                self._extend(r + 1, new_ech, mask, t0 + (r,), target)

    def _leaf(self, echelon, t0_mask, t0) -> None:
        self.tests += 1
        if echelon:
            vec = _kernel_from_echelon(echelon, self.k, self.red, self.deg)
        else:
            vec = [[1] + [0] * (self.deg - 1)]
        zero_mask = t0_mask | _spectrum_zero_mask(
            vec, self.col_exps, self.n, self.red, self.deg, t0_mask
        )
        size = zero_mask.bit_count()
        # only closures strictly larger than their basis can prune later leaves
        if size > self.k - 1 and zero_mask not in self.closure_masks:
            self.closure_masks.append(zero_mask)
        if size > self.best_size:
            better = True
        elif size == self.best_size:
            zeros = _mask_to_tuple(zero_mask)
            better = zeros < self.best_zeros
        else:
            better = False
        if better:
            self.best_mask = zero_mask
            self.best_size = size
            self.best_zeros = _mask_to_tuple(zero_mask)
            self.best_vec = vec


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    r = 0
    while mask:
        if mask & 1:
            out.append(r)
        mask >>= 1
        r += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# fast-path dispatch

use_fast_scan = True  # tests flip this to force the arbitrary-precision path

_fastscan = None


def _load_fastscan():
    global _fastscan
    if _fastscan is None:
        from . import _fastscan as mod

        _fastscan = mod
    return _fastscan


@lru_cache(maxsize=None)
def _group_arrays(group: GroupSpec):
    import numpy as np

    red = _reduction_rows(group.exponent)
    red_np = np.array(red, dtype=np.int64)
    pn = pairing_matrix(group, True)
    pn_np = np.array(pn, dtype=np.int64)
    maxred = int(abs(red_np).max())
    return pn_np, red_np, maxred


def _scan_support(group: GroupSpec, s: tuple[int, ...]):
    """Best (closure size, zero set, kernel vector, tests) for one support."""
    k = len(s)
    if use_fast_scan and k > 1 and group.order <= 62:
        import numpy as np

        pn_np, red_np, maxred = _group_arrays(group)
        exps = np.ascontiguousarray(pn_np[:, list(s)])
        mod = _load_fastscan()
        status, size, mask, vec, tests = mod.scan_support(exps, red_np, k - 1, maxred)
        if status == 0:
            zeros = _mask_to_tuple(int(mask))
            vec_list = [[int(c) for c in poly] for poly in vec]
            return int(size), zeros, vec_list, int(tests)
        # int64 bound check tripped: redo this support exactly
    scan = _SupportScan(group, s)
    scan.run()
    assert scan.best_vec is not None
    return scan.best_size, scan.best_zeros, scan.best_vec, scan.tests


def _witness_signal(group: GroupSpec, s_indices, vec, modulus: int) -> Signal:
    vals = [Cyc.zero(modulus)] * group.order
    for idx, poly in zip(s_indices, vec):
        vals[idx] = Cyc(modulus, poly)
    return Signal(group, tuple(vals))


# ---------------------------------------------------------------------------
# public operations


def min_cosupport(
    group: GroupSpec,
    s_indices: Iterable[int],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[int, Signal]:
    """Minimum |supp(fhat)| over nonzero f supported in S, with a witness."""
    s = tuple(sorted(set(int(i) for i in s_indices)))
    if not s:
        raise ValueError("support set must be nonempty")
    n = group.order
    if s[0] < 0 or s[-1] >= n:
        raise ValueError(f"support indices out of range for order {n}")
    tests = math.comb(n, len(s) - 1)
    if tests > budget.max_rank_tests:
        raise BudgetExceeded(
            f"support {s} needs {tests} rank tests > budget {budget.max_rank_tests}"
        )
    best_size, _zeros, vec, _tests = _scan_support(group, s)
    size = n - best_size
    witness = _witness_signal(group, s, vec, group.exponent)
    return size, witness


def theta_oracle(
    group: GroupSpec,
    k: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    pin_identity: bool = True,
) -> ThetaWitness:
    """Exact theta(G,k) by exhaustive search over supports of size k.

    Supports are enumerated in lexicographic order; with `pin_identity` the
    identity element is forced into S, which is sound because translating f
    permutes supp(f) and leaves supp(fhat) unchanged.  Ties between equal
    minima keep the lexicographically first (S, T) pair.
    """
    n = group.order
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    if pin_identity:
        n_supports = math.comb(n - 1, k - 1)
        supports = ((0,) + rest for rest in combinations(range(1, n), k - 1))
    else:
        n_supports = math.comb(n, k)
        supports = combinations(range(n), k)
    if n_supports > budget.max_support_sets:
        raise BudgetExceeded(
            f"{n_supports} support sets > budget {budget.max_support_sets}"
        )
    total_tests = n_supports * math.comb(n, k - 1)
    if total_tests > budget.max_rank_tests:
        raise BudgetExceeded(
            f"{total_tests} rank tests > budget {budget.max_rank_tests}"
        )

    best: tuple[int, tuple[int, ...], list[list[int]]] | None = None
    for s in supports:
        best_size, _zeros, vec, _tests = _scan_support(group, s)
        size = n - best_size
        if best is None or size < best[0]:
            best = (size, s, vec)
            if size == 1:
                break  # absolute floor: no nonzero f has an empty spectrum
    assert best is not None
    theta, s, vec = best
    witness = _witness_signal(group, s, vec, group.exponent)
    return ThetaWitness(
        group=group,
        k=k,
        theta=theta,
        witness=witness,
        witness_support=support(witness),
        witness_cosupport_size=theta,
    )


def chebotarev_check(p: int, max_size: int | None = None) -> MinorCertificate:
    """Exhaustively test square DFT submatrices of Z_p for singularity.

    For prime p no singular minor exists (all minors of the p-point Fourier
    matrix are nonsingular); for composite p the first singular minor found
    is returned as a diagnostic.  Enumeration is by size, then rows, then
    columns, all lexicographic, so the reported minor is deterministic.
    """
    if p < 2:
        raise ValueError(f"order must be >= 2, got {p}")
    group = make_group([p])
    pneg = pairing_matrix(group, True)
    red = _reduction_rows(group.exponent)
    deg = len(red[0])
    top = max_size if max_size is not None else p
    top = min(top, p)
    checked = 1  # the empty minor is vacuously nonsingular
    for size in range(1, top + 1):
        for rows in combinations(range(p), size):
            for cols in combinations(range(p), size):
                checked += 1
                echelon: list = []
                singular = False
                for r in rows:
                    row = [list(red[pneg[r][c]]) for c in cols]
                    piv = _reduce_against(row, echelon, red, deg)
                    if piv is None:
                        singular = True
                        break
                    echelon.append((piv, row))
                    echelon.sort(key=lambda pr: pr[0])
                if singular:
                    return MinorCertificate(p, checked, (rows, cols))
    return MinorCertificate(p, checked, None)


def extremal_subgroup_function(group: GroupSpec, sub: Subgroup, chi: Element) -> Signal:
    """f(x) = chi(x) for x in H, 0 otherwise: the classical equality case.

    Its transform is |H| times the indicator of a coset of H^perp, so
    |supp(f)| * |supp(fhat)| = |G| exactly.
    """
    if sub.parent != group:
        raise ValueError("subgroup belongs to a different group")
    group.validate(chi)
    n_exp = group.exponent
    vals = [Cyc.zero(n_exp)] * group.order
    for h in sub.elements:
        vals[group.index(h)] = zeta_pow(n_exp, char_pairing(group, chi, h))
    return Signal(group, tuple(vals))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def tao_tight_construct(
    p: int,
    k: int,
    s_indices: Sequence[int] | None = None,
    t_indices: Sequence[int] | None = None,
) -> Signal:
    """A function on Z_p with |supp(f)| = k and |supp(fhat)| = p + 1 - k.

    Solves for nonzero f supported in S whose transform vanishes on T, a
    (k-1) x k system whose kernel is one-dimensional because every square
    submatrix of the prime-order DFT matrix is nonsingular.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= p:
        raise ValueError(f"k must satisfy 1 <= k <= {p}, got {k}")
    s = tuple(s_indices) if s_indices is not None else tuple(range(k))
    t = tuple(t_indices) if t_indices is not None else tuple(range(k - 1))
    if len(set(s)) != k or len(set(t)) != k - 1:
        raise ValueError(f"need |S| = {k} distinct indices and |T| = {k - 1}")
    if any(not 0 <= i < p for i in s) or any(not 0 <= i < p for i in t):
        raise ValueError("indices out of range")
    group = make_group([p])
    if k == 1:
        vals = [Cyc.zero(p)] * p
        vals[s[0]] = Cyc.one(p)
        return Signal(group, tuple(vals))
    pneg = pairing_matrix(group, True)
    matrix = ExactMatrix.from_rows(
        [[zeta_pow(p, pneg[r][c]) for c in s] for r in t]
    )
    rank, basis = exact_kernel(matrix)
    assert rank == k - 1 and len(basis) == 1, "prime-order minor unexpectedly singular"
    vals = [Cyc.zero(p)] * p
    for idx, v in zip(s, basis[0]):
        vals[idx] = v
    return Signal(group, tuple(vals))


def witness_json_dict(w: ThetaWitness) -> dict:
    """The JSON-exportable form of a certified minimizer."""
    spec_support = support(dft(w.witness))
    return {
        "group": ",".join(str(m) for m in w.group.factor_orders),
        "k": w.k,
        "theta": w.theta,
        "support_indices": list(w.witness_support),
        "spectrum_support_indices": list(spec_support),
        "values": [
            [str(c) for c in v.coefficients] for v in w.witness.values
        ],
    }
