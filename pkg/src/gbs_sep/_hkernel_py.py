"""Pure-Python kernels for H(n,r,s); mirrors ``_hkernel.pyx`` function for function.

Elements are residue pairs ``(i, j)`` standing for ``t^i a^j``; flat indices are
``i * s + j``.  ``n`` must already be reduced modulo ``s``.
"""

from math import gcd


def _powers(n, r, s):
    pw = [1 % s] * r
    for i in range(1, r):
        pw[i] = pw[i - 1] * n % s
    return pw


def _mul(pw, r, s, i1, j1, i2, j2):
    return (i1 + i2) % r, (j1 * pw[i2] + j2) % s


def _inv(pw, r, s, i, j):
    ii = (r - i) % r
    return ii, (-j * pw[ii]) % s


def _conj(pw, r, s, i, j, ci, cj):
    ki, kj = _inv(pw, r, s, ci, cj)
    pi, pj = _mul(pw, r, s, ki, kj, i, j)
    return _mul(pw, r, s, pi, pj, ci, cj)


def conjugate_bruteforce(n, r, s, i1, j1, i2, j2):
    pw = _powers(n, r, s)
    for ci in range(r):
        for cj in range(s):
            if _conj(pw, r, s, i1, j1, ci, cj) == (i2, j2):
                return True
    return False


def bruteforce_class_labels(n, r, s):
    pw = _powers(n, r, s)
    size = r * s
    labels = [-1] * size
    for idx in range(size):
        if labels[idx] >= 0:
            continue
        i, j = divmod(idx, s)
        for ci in range(r):
            for cj in range(s):
                ki, kj = _conj(pw, r, s, i, j, ci, cj)
                labels[ki * s + kj] = idx
    return labels


def _criterion(pw, n, r, s, i1, j1, i2, j2):
    if i1 != i2:
        return False
    d = gcd((pw[i1] - 1) % s, s)
    cur = j2 % d
    target = j1 % d
    step = n % d
    for _ in range(r):
        if cur == target:
            return True
        cur = cur * step % d
    return False


def criterion_conjugate(n, r, s, i1, j1, i2, j2):
    return _criterion(_powers(n, r, s), n, r, s, i1, j1, i2, j2)


def criterion_bruteforce_disagreements(n, r, s):
    pw = _powers(n, r, s)
    labels = bruteforce_class_labels(n, r, s)
    size = r * s
    bad = 0
    for x in range(size):
        i1, j1 = divmod(x, s)
        for y in range(size):
            i2, j2 = divmod(y, s)
            if _criterion(pw, n, r, s, i1, j1, i2, j2) != (labels[x] == labels[y]):
                bad += 1
    return bad


def axiom_violations(n, r, s):
    pw = _powers(n, r, s)
    bad = 0
    elems = [(i, j) for i in range(r) for j in range(s)]
    for x in elems:
        ii, ij = _inv(pw, r, s, *x)
        if _mul(pw, r, s, *x, ii, ij) != (0, 0) or _mul(pw, r, s, *x, 0, 0) != x:
            bad += 1
        for y in elems:
            xy = _mul(pw, r, s, *x, *y)
            for z in elems:
                if _mul(pw, r, s, *xy, *z) != _mul(pw, r, s, *x, *_mul(pw, r, s, *y, *z)):
                    bad += 1
    return bad
