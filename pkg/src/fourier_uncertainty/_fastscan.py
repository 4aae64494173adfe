"""JIT-compiled inner loop for the support scans.

Same algorithm as the pure-Python scanner in `search`: depth-first
enumeration of basis subsets T0 with shared echelon prefixes,
cross-multiplication elimination over Z[zeta_N] in the reduced power basis,
one-dimensional kernel extraction, and zero-set closure.  Arithmetic is
exact int64; every multiplication is preceded by a conservative magnitude
bound check, and a scan that could overflow reports failure so the caller
can redo that support with arbitrary-precision integers.  Within bounds the
results are bit-identical to the exact scanner.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# bound checks compare against this in float64; int64 holds ~9.2e18
_LIMIT = 4.0e18

_CM_CAP = 4096  # recorded closures per support; exceeding it only weakens pruning


@njit(cache=True, inline="always")
def _gcd(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, inline="always")
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _mul_red_into(a, b, red, deg, conv, out):
    """out[:] = a * b reduced mod Phi; conv is scratch of length 2*deg-1."""
    for m in range(2 * deg - 1):
        conv[m] = 0
    for i in range(deg):
        ai = a[i]
        if ai != 0:
            for j in range(deg):
                bj = b[j]
                if bj != 0:
                    conv[i + j] += ai * bj
    for i in range(deg):
        out[i] = conv[i]
    for m in range(deg, 2 * deg - 1):
        c = conv[m]
        if c != 0:
            for i in range(deg):
                out[i] += c * red[m, i]
    return out


@njit(cache=True)
def _strip_max(row, k, deg):
    """Divide out the integer content of a (k, deg) block; return max |entry|."""
    g = np.int64(0)
    for j in range(k):
        for i in range(deg):
            c = row[j, i]
            if c != 0:
                g = _gcd(g, c)
                if g == 1:
                    break
        if g == 1:
            break
    if g > 1:
        for j in range(k):
            for i in range(deg):
                row[j, i] //= g
    mx = np.int64(0)
    for j in range(k):
        for i in range(deg):
            c = row[j, i]
            if c < 0:
                c = -c
            if c > mx:
                mx = c
    return mx


@njit(cache=True)
def scan_support(exps, red, target, maxred):
    """Max zero-set closure over all full-rank basis subsets for one support.

    exps: (n, k) int64 zeta exponents of the DFT submatrix entries.
    red:  (n + deg - 1, deg) int64 power-basis rows of x^m mod Phi.
    target: k - 1 (must be >= 1; the caller handles k = 1).
    maxred: max |entry| of red.

    Returns (status, best_size, best_mask, best_vec, tests); status 1 means
    an int64 bound check failed and the caller must redo this support.
    """
    n, k = exps.shape
    deg = red.shape[1]
    one = np.int64(1)

    er = np.zeros((target, k, deg), dtype=np.int64)  # echelon rows
    epiv = np.zeros(target, dtype=np.int64)
    emax = np.zeros(target, dtype=np.float64)
    sort = np.zeros(target, dtype=np.int64)  # depths ordered by pivot column
    rstack = np.zeros(target, dtype=np.int64)
    pmask = np.zeros(target + 1, dtype=np.int64)
    cm = np.zeros(_CM_CAP, dtype=np.int64)
    cm_count = 0

    w = np.zeros((k, deg), dtype=np.int64)
    vec = np.zeros((k, deg), dtype=np.int64)
    conv = np.zeros(2 * deg - 1, dtype=np.int64)
    tmp = np.zeros(deg, dtype=np.int64)
    tmp2 = np.zeros(deg, dtype=np.int64)
    acc = np.zeros(deg, dtype=np.int64)
    vals = np.zeros(deg, dtype=np.int64)
    pivflag = np.zeros(k, dtype=np.int64)

    best_size = np.int64(-1)
    best_mask = np.int64(0)
    best_vec = np.zeros((k, deg), dtype=np.int64)
    tests = np.int64(0)

    red_factor = 1.0 + (deg - 1) * float(maxred)

    depth = 0
    r = 0
    while True:
        if r + (target - depth) > n:
            if depth == 0:
                break
            depth -= 1
            r = rstack[depth] + 1
            # remove `depth` from the sorted echelon order
            pos = 0
            for i in range(depth + 1):
                if sort[i] == depth:
                    pos = i
                    break
            for i in range(pos, depth):
                sort[i] = sort[i + 1]
            continue

        leaf = depth == target - 1
        mask = pmask[depth] | (one << np.int64(r))
        if leaf and cm_count > 0:
            pruned = False
            for ci in range(cm_count):
                if (mask & ~cm[ci]) == 0:
                    pruned = True
                    break
            if pruned:
                r += 1
                continue

        # load the base row of zeta powers and reduce it against the echelon
        for j in range(k):
            e = exps[r, j]
            for i in range(deg):
                w[j, i] = red[e, i]
        maxw = float(maxred)
        ok = True
        for si in range(depth):
            d_i = sort[si]
            pc = epiv[d_i]
            lead_nonzero = False
            for i in range(deg):
                if w[pc, i] != 0:
                    lead_nonzero = True
                    break
            if not lead_nonzero:
                continue
            bound = 2.0 * deg * maxw * emax[d_i] * red_factor
            if bound >= _LIMIT:
                return 1, best_size, best_mask, best_vec, tests
            for i in range(deg):
                tmp2[i] = w[pc, i]  # lead, copied: w[pc] mutates mid-loop
            for j in range(k):
                _mul_red_into(er[d_i, pc], w[j], red, deg, conv, tmp)
                erj_nonzero = False
                for i in range(deg):
                    if er[d_i, j, i] != 0:
                        erj_nonzero = True
                        break
                if erj_nonzero:
                    _mul_red_into(tmp2, er[d_i, j], red, deg, conv, vals)
                    for i in range(deg):
                        w[j, i] = tmp[i] - vals[i]
                else:
                    for i in range(deg):
                        w[j, i] = tmp[i]
            maxw = float(_strip_max(w, k, deg))
            if maxw == 0.0:
                break
        piv = -1
        for j in range(k):
            for i in range(deg):
                if w[j, i] != 0:
                    piv = j
                    break
            if piv >= 0:
                break
        if piv < 0:
            r += 1
            continue

        if not leaf:
            for j in range(k):
                for i in range(deg):
                    er[depth, j, i] = w[j, i]
            epiv[depth] = piv
            emax[depth] = maxw
            pos = depth
            for i in range(depth):
                if epiv[sort[i]] > piv:
                    pos = i
                    break
            for i in range(depth, pos, -1):
                sort[i] = sort[i - 1]
            sort[pos] = depth
            rstack[depth] = r
            pmask[depth + 1] = mask
            depth += 1
            r = rstack[depth - 1] + 1
            continue

        # leaf: temporarily install the row, solve the 1-dim kernel
        tests += 1
        for j in range(k):
            for i in range(deg):
                er[depth, j, i] = w[j, i]
        epiv[depth] = piv
        emax[depth] = maxw
        pos = depth
        for i in range(depth):
            if epiv[sort[i]] > piv:
                pos = i
                break
        for i in range(depth, pos, -1):
            sort[i] = sort[i - 1]
        sort[pos] = depth

        for j in range(k):
            pivflag[j] = 0
            for i in range(deg):
                vec[j, i] = 0
        for si in range(target):
            pivflag[epiv[sort[si]]] = 1
        free = -1
        for j in range(k):
            if pivflag[j] == 0:
                free = j
                break
        vec[free, 0] = 1
        maxv = 1.0
        ok = True
        for si in range(target - 1, -1, -1):
            d_i = sort[si]
            pc = epiv[d_i]
            bound = k * deg * emax[d_i] * maxv * red_factor
            if bound >= _LIMIT:
                ok = False
                break
            for i in range(deg):
                acc[i] = 0
            for j in range(pc + 1, k):
                vj_nonzero = False
                for i in range(deg):
                    if vec[j, i] != 0:
                        vj_nonzero = True
                        break
                if not vj_nonzero:
                    continue
                ej_nonzero = False
                for i in range(deg):
                    if er[d_i, j, i] != 0:
                        ej_nonzero = True
                        break
                if not ej_nonzero:
                    continue
                _mul_red_into(er[d_i, j], vec[j], red, deg, conv, tmp)
                for i in range(deg):
                    acc[i] += tmp[i]
            for j in range(k):
                vj_nonzero = False
                for i in range(deg):
                    if vec[j, i] != 0:
                        vj_nonzero = True
                        break
                if vj_nonzero:
                    _mul_red_into(er[d_i, pc], vec[j], red, deg, conv, tmp)
                    for i in range(deg):
                        vec[j, i] = tmp[i]
            for i in range(deg):
                vec[pc, i] = -acc[i]
            maxv = float(_strip_max(vec, k, deg))
        if not ok:
            return 1, best_size, best_mask, best_vec, tests

        # closure: exact zero set of the kernel vector's spectrum
        bound = k * deg * maxv * float(maxred)
        if bound >= _LIMIT:
            return 1, best_size, best_mask, best_vec, tests
        zmask = np.int64(0)
        for rr in range(n):
            is_zero = True
            for d in range(deg):
                s = np.int64(0)
                for j in range(k):
                    e = exps[rr, j]
                    for b in range(deg):
                        c = vec[j, b]
                        if c != 0:
                            s += c * red[e + b, d]
                if s != 0:
                    is_zero = False
                    break
            if is_zero:
                zmask |= one << np.int64(rr)
        size = _popcount(zmask)
        if size > target and cm_count < _CM_CAP:
            seen = False
            for ci in range(cm_count):
                if cm[ci] == zmask:
                    seen = True
                    break
            if not seen:
                cm[cm_count] = zmask
                cm_count += 1
        better = False
        if size > best_size:
            better = True
        elif size == best_size:
            d = best_mask ^ zmask
            if d != 0 and ((d & -d) & zmask) != 0:
                better = True  # lex-smaller zero tuple at equal size
        if better:
            best_size = np.int64(size)
            best_mask = zmask
            for j in range(k):
                for i in range(deg):
                    best_vec[j, i] = vec[j, i]

        # uninstall the temporary leaf row
        pos = 0
        for i in range(target):
            if sort[i] == depth:
                pos = i
                break
        for i in range(pos, target - 1):
            sort[i] = sort[i + 1]
        r += 1

    return 0, best_size, best_mask, best_vec, tests
