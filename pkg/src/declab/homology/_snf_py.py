"""Pure-Python Smith normal form kernel on flat row-major lists.

Mirrors the compiled kernel operation for operation, so both backends return
identical transforms.  Python integers never overflow.
"""

from __future__ import annotations


def _tdiv(a: int, b: int) -> int:
    # truncating division, matching C semantics
    q = abs(a) // abs(b)
    return q if (a < 0) == (b < 0) else -q


def smith(m: int, n: int, a: list[int]):
    """Reduce ``a`` in place; return ``(a, u, uinv, v, vinv)`` as flat lists.

    ``u * a_in * v == a_out`` with ``a_out`` diagonal, nonnegative and each
    diagonal entry dividing the next.
    """
    u = [int(i == j) for i in range(m) for j in range(m)]
    ui = list(u)
    v = [int(i == j) for i in range(n) for j in range(n)]
    vi = list(v)

    def rswap(i, j):
        for c in range(n):
            a[i * n + c], a[j * n + c] = a[j * n + c], a[i * n + c]
        for c in range(m):
            u[i * m + c], u[j * m + c] = u[j * m + c], u[i * m + c]
            ui[c * m + i], ui[c * m + j] = ui[c * m + j], ui[c * m + i]

    def cswap(i, j):
        for r in range(m):
            a[r * n + i], a[r * n + j] = a[r * n + j], a[r * n + i]
        for r in range(n):
            v[r * n + i], v[r * n + j] = v[r * n + j], v[r * n + i]
            vi[i * n + r], vi[j * n + r] = vi[j * n + r], vi[i * n + r]

    def raddmul(i, t, q):
        # row_i += q * row_t
        for c in range(n):
            a[i * n + c] += q * a[t * n + c]
        for c in range(m):
            u[i * m + c] += q * u[t * m + c]
            ui[c * m + t] -= q * ui[c * m + i]

    def caddmul(j, t, q):
        # col_j += q * col_t
        for r in range(m):
            a[r * n + j] += q * a[r * n + t]
        for r in range(n):
            v[r * n + j] += q * v[r * n + t]
            vi[t * n + r] -= q * vi[j * n + r]

    def rneg(i):
        for c in range(n):
            a[i * n + c] = -a[i * n + c]
        for c in range(m):
            u[i * m + c] = -u[i * m + c]
            ui[c * m + i] = -ui[c * m + i]

    t = 0
    while t < min(m, n):
        best, pi, pj = 0, -1, -1
        for i in range(t, m):
            for j in range(t, n):
                x = abs(a[i * n + j])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, i, j
        if best == 0:
            break
        if pi != t:
            rswap(t, pi)
        if pj != t:
            cswap(t, pj)
        while True:
            p = a[t * n + t]
            for i in range(t + 1, m):
                if a[i * n + t]:
                    raddmul(i, t, -_tdiv(a[i * n + t], p))
            for j in range(t + 1, n):
                if a[t * n + j]:
                    caddmul(j, t, -_tdiv(a[t * n + j], p))
            # leftover remainders in row t, then column t (row-major order)
            best, pi, pj = 0, -1, -1
            for j in range(t + 1, n):
                x = abs(a[t * n + j])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, t, j
            for i in range(t + 1, m):
                x = abs(a[i * n + t])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, i, t
            if best:
                if pi != t:
                    rswap(t, pi)
                if pj != t:
                    cswap(t, pj)
                continue
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i * n + j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            raddmul(t, bad, 1)
        if a[t * n + t] < 0:
            rneg(t)
        t += 1
    return a, u, ui, v, vi
