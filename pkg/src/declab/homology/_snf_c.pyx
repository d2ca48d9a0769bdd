# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith normal form kernel on int64 buffers.

Every multiply and add is overflow-checked; on overflow the kernel raises
``OverflowError`` and the caller reruns the pure-Python kernel on big integers.
"""

from array import array

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_add_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil

cdef long long LLMIN = -9223372036854775807LL - 1


cdef inline long long axpy(long long x, long long q, long long y) except? -1:
    # x + q * y, checked
    cdef long long p, r
    if __builtin_mul_overflow(q, y, &p) or __builtin_add_overflow(x, p, &r):
        raise OverflowError("int64 overflow in SNF kernel")
    return r


cdef inline long long neg(long long x) except? -1:
    if x == LLMIN:
        raise OverflowError("int64 overflow in SNF kernel")
    return -x


cdef inline long long absv(long long x) except? -1:
    if x == LLMIN:
        raise OverflowError("int64 overflow in SNF kernel")
    return -x if x < 0 else x


cdef int rswap(long long[:] a, long long[:] u, long long[:] ui, Py_ssize_t m, Py_ssize_t n,
               Py_ssize_t i, Py_ssize_t j) except -1:
    cdef Py_ssize_t c
    for c in range(n):
        a[i * n + c], a[j * n + c] = a[j * n + c], a[i * n + c]
    for c in range(m):
        u[i * m + c], u[j * m + c] = u[j * m + c], u[i * m + c]
        ui[c * m + i], ui[c * m + j] = ui[c * m + j], ui[c * m + i]
    return 0


cdef int cswap(long long[:] a, long long[:] v, long long[:] vi, Py_ssize_t m, Py_ssize_t n,
               Py_ssize_t i, Py_ssize_t j) except -1:
    cdef Py_ssize_t r
    for r in range(m):
        a[r * n + i], a[r * n + j] = a[r * n + j], a[r * n + i]
    for r in range(n):
        v[r * n + i], v[r * n + j] = v[r * n + j], v[r * n + i]
        vi[i * n + r], vi[j * n + r] = vi[j * n + r], vi[i * n + r]
    return 0


cdef int raddmul(long long[:] a, long long[:] u, long long[:] ui, Py_ssize_t m, Py_ssize_t n,
                 Py_ssize_t i, Py_ssize_t t, long long q) except -1:
    cdef Py_ssize_t c
    cdef long long nq = neg(q)
    for c in range(n):
        a[i * n + c] = axpy(a[i * n + c], q, a[t * n + c])
    for c in range(m):
        u[i * m + c] = axpy(u[i * m + c], q, u[t * m + c])
        ui[c * m + t] = axpy(ui[c * m + t], nq, ui[c * m + i])
    return 0


cdef int caddmul(long long[:] a, long long[:] v, long long[:] vi, Py_ssize_t m, Py_ssize_t n,
                 Py_ssize_t j, Py_ssize_t t, long long q) except -1:
    cdef Py_ssize_t r
    cdef long long nq = neg(q)
    for r in range(m):
        a[r * n + j] = axpy(a[r * n + j], q, a[r * n + t])
    for r in range(n):
        v[r * n + j] = axpy(v[r * n + j], q, v[r * n + t])
        vi[t * n + r] = axpy(vi[t * n + r], nq, vi[j * n + r])
    return 0


cdef int rneg(long long[:] a, long long[:] u, long long[:] ui, Py_ssize_t m, Py_ssize_t n,
              Py_ssize_t i) except -1:
    cdef Py_ssize_t c
    for c in range(n):
        a[i * n + c] = neg(a[i * n + c])
    for c in range(m):
        u[i * m + c] = neg(u[i * m + c])
        ui[c * m + i] = neg(ui[c * m + i])
    return 0


cdef long long tdiv(long long x, long long p) except? -1:
    if x == LLMIN and p == -1:
        raise OverflowError("int64 overflow in SNF kernel")
    return x / p


def _eye(Py_ssize_t k):
    out = array("q", bytes(8 * k * k))
    for i in range(k):
        out[i * k + i] = 1
    return out


def smith(Py_ssize_t m, Py_ssize_t n, flat):
    """Same contract as the pure kernel; raises ``OverflowError`` past int64."""
    A = array("q", flat)
    U, UI, V, VI = _eye(m), _eye(m), _eye(n), _eye(n)
    cdef long long[:] a = A
    cdef long long[:] u = U
    cdef long long[:] ui = UI
    cdef long long[:] v = V
    cdef long long[:] vi = VI
    cdef Py_ssize_t t = 0, i, j, pi, pj, bad
    cdef long long best, x, p
    while t < min(m, n):
        best, pi, pj = 0, -1, -1
        for i in range(t, m):
            for j in range(t, n):
                x = absv(a[i * n + j])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, i, j
        if best == 0:
            break
        if pi != t:
            rswap(a, u, ui, m, n, t, pi)
        if pj != t:
            cswap(a, v, vi, m, n, t, pj)
        while True:
            p = a[t * n + t]
            for i in range(t + 1, m):
                if a[i * n + t]:
                    raddmul(a, u, ui, m, n, i, t, neg(tdiv(a[i * n + t], p)))
            for j in range(t + 1, n):
                if a[t * n + j]:
                    caddmul(a, v, vi, m, n, j, t, neg(tdiv(a[t * n + j], p)))
            best, pi, pj = 0, -1, -1
            for j in range(t + 1, n):
                x = absv(a[t * n + j])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, t, j
            for i in range(t + 1, m):
                x = absv(a[i * n + t])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, i, t
            if best:
                if pi != t:
                    rswap(a, u, ui, m, n, t, pi)
                if pj != t:
                    cswap(a, v, vi, m, n, t, pj)
                continue
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if p != 1 and p != -1 and a[i * n + j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            raddmul(a, u, ui, m, n, t, bad, 1)
        if a[t * n + t] < 0:
            rneg(a, u, ui, m, n, t)
        t += 1
    return A.tolist(), U.tolist(), UI.tolist(), V.tolist(), VI.tolist()
