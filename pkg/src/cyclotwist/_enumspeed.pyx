# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel, a statement-for-statement twin of
_enum_py.  Same signature, same (sorted) results."""


cdef tuple _mul(tuple x, tuple y, int q, int size, int a):
    cdef list out = [0] * size
    cdef int i, j, k
    cdef long long xi, yj
    for i in range(size):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(size):
            yj = y[j]
            if yj == 0:
                continue
            k = i + j
            if k < size:
                out[k] = (out[k] + xi * yj) % q
            else:
                out[k - size] = (out[k - size] + a * xi * yj) % q
    return tuple(out)


def atoms(int q, int n, int a):
    """All minimal idempotents of F_q[g]/(g^(2^n) - a), sorted, as
    tuples of residues."""
    cdef int size = 1 << n
    if size > 32:
        raise ValueError("compiled kernel supports n <= 5")
    a %= q
    if a < 0:
        a += q
    cdef int v[32]
    cdef int i, k, pos
    cdef long long acc, wrap
    cdef bint ok
    cdef list idems = []
    for i in range(size):
        v[i] = 0
    while True:
        ok = True
        for k in range(size):
            acc = 0
            for i in range(k + 1):
                acc += v[i] * v[k - i]
            wrap = 0
            for i in range(k + 1, size):
                wrap += v[i] * v[size + k - i]
            if (acc + a * wrap) % q != v[k]:
                ok = False
                break
        if ok:
            idems.append(tuple([v[i] for i in range(size)]))
        pos = 0
        while pos < size and v[pos] == q - 1:
            v[pos] = 0
            pos += 1
        if pos == size:
            break
        v[pos] += 1
    zero = (0,) * size
    out = []
    for e in idems:
        if e == zero:
            continue
        keep = True
        for f in idems:
            p = _mul(e, f, q, size, a)
            if p != zero and p != e:
                keep = False
                break
        if keep:
            out.append(e)
    return sorted(out)
