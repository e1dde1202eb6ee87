# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twins of the pure-Python kernels (same signatures, same semantics).

Coefficients stay arbitrary-precision Python ints; the speedup comes from
typed index loops and the removal of interpreter dispatch in the inner loops.
"""

BACKEND = "cython"


def zx_trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def zx_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai != 0:
            for j in range(lb):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def zx_mod(list a, list f):
    cdef Py_ssize_t n = len(f) - 1, i, j, base
    cdef list r = list(a)
    cdef object c
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c != 0:
            r[i] = 0
            base = i - n
            for j in range(n):
                r[base + j] = r[base + j] - c * f[j]
    del r[n:]
    return zx_trim(r)


def zx_mulmod(list a, list b, list f):
    return zx_mod(zx_mul(a, b), f)


def zx_divexact(list v, d):
    cdef list out = []
    cdef object q, r
    for x in v:
        q, r = divmod(x, d)
        if r != 0:
            raise ValueError("non-exact division in zx_divexact")
        out.append(q)
    return out


def vec_reduce_mod_rows(w, list rows, scale):
    cdef Py_ssize_t n = len(rows), k, j
    cdef list ww = list(w)
    if len(ww) < n:
        ww = ww + [0] * (n - len(ww))
    cdef object m, q
    cdef list row
    for k in range(n - 1, -1, -1):
        row = rows[k]
        m = scale * row[k]
        q = ww[k] // m
        if q != 0:
            for j in range(k + 1):
                ww[j] = ww[j] - q * scale * row[j]
    return ww


def solve_lower_coords(list rows, w):
    cdef Py_ssize_t n = len(rows), k, j
    cdef list ww = list(w) + [0] * (n - len(w))
    cdef list c = [0] * n
    cdef object q, r
    cdef list row
    for k in range(n - 1, -1, -1):
        row = rows[k]
        q, r = divmod(ww[k], row[k])
        if r != 0:
            raise ValueError("vector not in lattice")
        c[k] = q
        if q != 0:
            for j in range(k + 1):
                ww[j] = ww[j] - q * row[j]
    for x in ww:
        if x != 0:
            raise ValueError("vector not in lattice")
    return c


def hnf_rows(rows, Py_ssize_t ncols):
    cdef list work = [list(r) for r in rows if any(r)]
    cdef list pivots = []
    cdef list active, rest, piv, r_row, rowi, rowk
    cdef Py_ssize_t col, j, i, k, deg
    cdef object q
    for col in range(ncols - 1, -1, -1):
        active = []
        rest = []
        for r_row in work:
            deg = ncols - 1
            while deg >= 0 and r_row[deg] == 0:
                deg -= 1
            if deg == col:
                active.append(r_row)
            else:
                rest.append(r_row)
        if not active:
            work = rest
            continue
        piv = active[0]
        for i in range(1, len(active)):
            r_row = active[i]
            while r_row[col] != 0:
                q = piv[col] // r_row[col]
                if q != 0:
                    for j in range(col + 1):
                        piv[j] = piv[j] - q * r_row[j]
                piv, r_row = r_row, piv
            rest.append(r_row)
        if piv[col] < 0:
            for j in range(col + 1):
                piv[j] = -piv[j]
        pivots.append((col, piv))
        work = rest
    pivots.reverse()
    cdef list out = [p[1] for p in pivots]
    cdef Py_ssize_t ci
    cdef object pval
    # descending pivot order: a reduction never disturbs a later column
    for i in range(len(pivots) - 1, -1, -1):
        ci = pivots[i][0]
        rowi = pivots[i][1]
        pval = rowi[ci]
        for k in range(i + 1, len(pivots)):
            rowk = pivots[k][1]
            q = rowk[ci] // pval
            if q != 0:
                for j in range(ci + 1):
                    rowk[j] = rowk[j] - q * rowi[j]
    return out


cdef list _prem(list a, list b):
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, k, i, j
    cdef object lb = b[db], top
    cdef list r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        for i in range(len(r)):
            r[i] = r[i] * lb
        if top != 0:
            for j in range(db + 1):
                r[j + k] = r[j + k] - top * b[j]
        del r[db + k]
    return zx_trim(r)


def zx_resultant(a, b):
    cdef list aa = zx_trim(list(a))
    cdef list bb = zx_trim(list(b))
    if not aa or not bb:
        raise ValueError("resultant of zero polynomial")
    cdef Py_ssize_t da = len(aa) - 1, db = len(bb) - 1, delta
    cdef int sign = 1
    if da < db:
        aa, bb = bb, aa
        if (da & 1) and (db & 1):
            sign = -1
        da, db = db, da
    if db == 0:
        return sign * bb[0] ** da
    cdef object g = 1, h = 1, denom, res
    cdef list r
    while True:
        delta = da - db
        if (da & 1) and (db & 1):
            sign = -sign
        r = _prem(aa, bb)
        if not r:
            return 0
        aa = bb
        bb = r
        da = len(aa) - 1
        denom = g * h**delta
        bb = [c // denom for c in bb]
        db = len(bb) - 1
        g = aa[da]
        if delta:
            h = g**delta // h ** (delta - 1)
        if db == 0:
            break
    res = bb[0] ** da // h ** (da - 1) if da > 1 else bb[0] ** da
    return sign * res
