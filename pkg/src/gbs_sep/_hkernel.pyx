# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for H(n,r,s); same contract as ``_hkernel_py``.

Residues stay below ``s <= 10**6`` so every product fits in 64 bits.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 _mod(i64 x, i64 m) noexcept nogil:
    cdef i64 y = x % m
    return y + m if y < 0 else y


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef i64* _powers(i64 n, i64 r, i64 s) except NULL:
    cdef i64* pw = <i64*> malloc(r * sizeof(i64))
    if pw == NULL:
        raise MemoryError()
    cdef i64 i
    pw[0] = 1 % s
    for i in range(1, r):
        pw[i] = pw[i - 1] * n % s
    return pw


cdef inline void _conj(const i64* pw, i64 r, i64 s, i64 i, i64 j,
                       i64 ci, i64 cj, i64* oi, i64* oj) noexcept nogil:
    # c^-1 x c with c^-1 = (-ci, -cj n^(r-ci))
    cdef i64 ki = (r - ci) % r
    cdef i64 kj = _mod(-cj * pw[ki], s)
    cdef i64 pi = (ki + i) % r
    cdef i64 pj = (kj * pw[i] + j) % s
    oi[0] = (pi + ci) % r
    oj[0] = (pj * pw[ci] + cj) % s


cdef inline bint _criterion(const i64* pw, i64 n, i64 r, i64 s,
                            i64 i1, i64 j1, i64 i2, i64 j2) noexcept nogil:
    if i1 != i2:
        return False
    cdef i64 d = _gcd(_mod(pw[i1] - 1, s), s)
    cdef i64 cur = j2 % d
    cdef i64 target = j1 % d
    cdef i64 step = n % d
    cdef i64 k
    for k in range(r):
        if cur == target:
            return True
        cur = cur * step % d
    return False


def conjugate_bruteforce(i64 n, i64 r, i64 s, i64 i1, i64 j1, i64 i2, i64 j2):
    cdef i64* pw = _powers(n, r, s)
    cdef i64 ci, cj, oi, oj
    cdef bint found = False
    with nogil:
        for ci in range(r):
            for cj in range(s):
                _conj(pw, r, s, i1, j1, ci, cj, &oi, &oj)
                if oi == i2 and oj == j2:
                    found = True
                    break
            if found:
                break
    free(pw)
    return found


cdef i64* _labels(const i64* pw, i64 r, i64 s) except NULL:
    cdef i64 size = r * s
    cdef i64* labels = <i64*> malloc(size * sizeof(i64))
    if labels == NULL:
        raise MemoryError()
    cdef i64 idx, ci, cj, oi, oj
    with nogil:
        for idx in range(size):
            labels[idx] = -1
        for idx in range(size):
            if labels[idx] >= 0:
                continue
            for ci in range(r):
                for cj in range(s):
                    _conj(pw, r, s, idx // s, idx % s, ci, cj, &oi, &oj)
                    labels[oi * s + oj] = idx
    return labels


def bruteforce_class_labels(i64 n, i64 r, i64 s):
    cdef i64* pw = _powers(n, r, s)
    cdef i64* labels
    try:
        labels = _labels(pw, r, s)
    finally:
        free(pw)
    out = [labels[k] for k in range(r * s)]
    free(labels)
    return out


def criterion_conjugate(i64 n, i64 r, i64 s, i64 i1, i64 j1, i64 i2, i64 j2):
    cdef i64* pw = _powers(n, r, s)
    cdef bint res = _criterion(pw, n, r, s, i1, j1, i2, j2)
    free(pw)
    return res


def criterion_bruteforce_disagreements(i64 n, i64 r, i64 s):
    cdef i64* pw = _powers(n, r, s)
    cdef i64* labels
    try:
        labels = _labels(pw, r, s)
    except MemoryError:
        free(pw)
        raise
    cdef i64 size = r * s
    cdef i64 x, y, bad = 0
    with nogil:
        for x in range(size):
            for y in range(size):
                if _criterion(pw, n, r, s, x // s, x % s, y // s, y % s) != (labels[x] == labels[y]):
                    bad += 1
    free(labels)
    free(pw)
    return bad


cdef inline void _mul(const i64* pw, i64 r, i64 s, i64 i1, i64 j1, i64 i2, i64 j2,
                      i64* oi, i64* oj) noexcept nogil:
    oi[0] = (i1 + i2) % r
    oj[0] = (j1 * pw[i2] + j2) % s


def axiom_violations(i64 n, i64 r, i64 s):
    """Count failures of associativity, right identity and right inverses."""
    cdef i64* pw = _powers(n, r, s)
    cdef i64 size = r * s
    cdef i64* table = <i64*> malloc(size * size * sizeof(i64))
    if table == NULL:
        free(pw)
        raise MemoryError()
    cdef i64 x, y, z, xy, oi, oj, ii, ij, bad = 0
    with nogil:
        for x in range(size):
            for y in range(size):
                _mul(pw, r, s, x // s, x % s, y // s, y % s, &oi, &oj)
                table[x * size + y] = oi * s + oj
        for x in range(size):
            ii = (r - x // s) % r
            ij = _mod(-(x % s) * pw[ii], s)
            if table[x * size + ii * s + ij] != 0 or table[x * size] != x:
                bad += 1
            for y in range(size):
                xy = table[x * size + y]
                for z in range(size):
                    if table[xy * size + z] != table[x * size + table[y * size + z]]:
                        bad += 1
    free(table)
    free(pw)
    return bad
