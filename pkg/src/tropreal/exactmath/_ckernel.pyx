# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction kernels (same contract as ``_pykernel``).

``rref_int`` works in 64-bit machine integers and raises ``OverflowError``
when an intermediate product would not fit; callers fall back to the
arbitrary-precision pure-Python kernel in that case.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef extern from *:
    """
    static inline int mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int mul_ovf(i64 a, i64 b, i64 *r) nogil
    int sub_ovf(i64 a, i64 b, i64 *r) nogil


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef i64 _powmod(i64 base, i64 exp, i64 mod) nogil:
    cdef i64 result = 1
    base %= mod
    while exp > 0:
        if exp & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        exp >>= 1
    return result


cdef i64* _load(list rows, Py_ssize_t nrows, Py_ssize_t ncols, i64 p) except NULL:
    cdef i64* a = <i64*> malloc(max(nrows * ncols, 1) * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef object x
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j]
                if p:
                    x = x % p
                a[i * ncols + j] = <i64> x
    except BaseException:
        free(a)
        raise
    return a


cdef tuple _unload(i64* a, list order, Py_ssize_t r, Py_ssize_t ncols, list pivots):
    cdef Py_ssize_t i, j
    out = []
    for i in range(r):
        base = <Py_ssize_t> order[i] * ncols
        out.append([a[base + j] for j in range(ncols)])
    return out, pivots


def rref_mod_p(list rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if p <= 1 or p >= (1LL << 31):
        raise ValueError("prime must lie in (1, 2^31)")
    cdef i64* a = _load(rows, nrows, ncols, p)
    cdef list order = list(range(nrows))
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv, tmp
    cdef i64 inv, f
    cdef i64* pr
    cdef i64* ri
    try:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[<Py_ssize_t> order[i] * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                order[r], order[piv] = order[piv], order[r]
            pr = a + <Py_ssize_t> order[r] * ncols
            inv = _powmod(pr[c], p - 2, p)
            if inv != 1:
                for j in range(ncols):
                    pr[j] = (pr[j] * inv) % p
            for i in range(nrows):
                if i == r:
                    continue
                ri = a + <Py_ssize_t> order[i] * ncols
                f = ri[c]
                if f:
                    for j in range(ncols):
                        ri[j] = (ri[j] - f * pr[j]) % p
                        if ri[j] < 0:
                            ri[j] += p
            pivots.append(c)
            r += 1
        return _unload(a, order, r, ncols, pivots)
    finally:
        free(a)


cdef int _make_primitive(i64* row, Py_ssize_t ncols) nogil:
    cdef i64 g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return 0
    if g > 1:
        for j in range(ncols):
            row[j] //= g
    return 0


def rref_int(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef i64* a = _load(rows, nrows, ncols, 0)
    cdef list order = list(range(nrows))
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 pv, f, g, s, t, u, w
    cdef i64* pr
    cdef i64* ri
    cdef bint ovf = 0
    try:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[<Py_ssize_t> order[i] * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                order[r], order[piv] = order[piv], order[r]
            pr = a + <Py_ssize_t> order[r] * ncols
            _make_primitive(pr, ncols)
            if pr[c] < 0:
                for j in range(ncols):
                    pr[j] = -pr[j]
            pv = pr[c]
            for i in range(nrows):
                if i == r:
                    continue
                ri = a + <Py_ssize_t> order[i] * ncols
                f = ri[c]
                if f:
                    g = _gcd(pv, f)
                    s = pv // g
                    t = f // g
                    for j in range(ncols):
                        if mul_ovf(s, ri[j], &u) or mul_ovf(t, pr[j], &w) or sub_ovf(u, w, &ri[j]):
                            ovf = 1
                            break
                    if ovf:
                        break
                    _make_primitive(ri, ncols)
            if ovf:
                raise OverflowError("int64 overflow in fraction-free elimination")
            pivots.append(c)
            r += 1
        return _unload(a, order, r, ncols, pivots)
    finally:
        free(a)
