# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-matching kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXV = 16
    MAXK = 8


cdef inline int _pair_index(int k, int i, int j) nogil:
    return i * (2 * k - i - 1) // 2 + (j - i - 1)


cdef int _load(object out, int s, unsigned int *masks) except -1:
    cdef int u
    if s > MAXV:
        raise ValueError("host too large")
    for u in range(s):
        masks[u] = <unsigned int>out[u]
    return 0


cdef inline unsigned int _code(const unsigned int *masks, const int *verts, int k,
                               const unsigned int *bits) nogil:
    cdef unsigned int code = 0
    cdef int i, j, p = 0
    for i in range(k):
        for j in range(i + 1, k):
            if (masks[verts[i]] >> verts[j]) & 1:
                code |= bits[p]
            p += 1
    return code


cdef inline bint _next_comb(int *c, int k, int n) nogil:
    cdef int i = k - 1
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    i += 1
    while i < k:
        c[i] = c[i - 1] + 1
        i += 1
    return True


cdef void _bits(int k, unsigned int *bits) nogil:
    cdef int i, j, p = 0
    for i in range(k):
        for j in range(i + 1, k):
            bits[p] = 1u << _pair_index(k, i, j)
            p += 1


def count_matches(out, int s, int k, const unsigned char[:] table):
    cdef unsigned int masks[MAXV]
    cdef unsigned int bits[MAXK * MAXK]
    cdef int c[MAXK]
    cdef int i
    cdef long total = 0
    if k > MAXK or k > s:
        raise ValueError("pattern size out of range")
    _load(out, s, masks)
    _bits(k, bits)
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            if table[_code(masks, c, k, bits)]:
                total += 1
            if not _next_comb(c, k, s):
                break
    return total


def count_through(out, int s, int k, const unsigned char[:] table, int u, int v):
    cdef unsigned int masks[MAXV]
    cdef unsigned int bits[MAXK * MAXK]
    cdef int rest[MAXV]
    cdef int c[MAXK]
    cdef int verts[MAXK]
    cdef int i, j, x, n = 0, tmp
    cdef long total = 0
    if k > MAXK or k > s or k < 2:
        raise ValueError("pattern size out of range")
    _load(out, s, masks)
    _bits(k, bits)
    for x in range(s):
        if x != u and x != v:
            rest[n] = x
            n += 1
    for i in range(k - 2):
        c[i] = i
    while True:
        verts[0] = u
        verts[1] = v
        for i in range(k - 2):
            verts[i + 2] = rest[c[i]]
        # insertion sort, k <= 8
        for i in range(1, k):
            tmp = verts[i]
            j = i - 1
            while j >= 0 and verts[j] > tmp:
                verts[j + 1] = verts[j]
                j -= 1
            verts[j + 1] = tmp
        if table[_code(masks, verts, k, bits)]:
            total += 1
        if k == 2 or not _next_comb(c, k - 2, n):
            break
    return total


def flip_deltas(out, int s, int k, const unsigned char[:] table):
    cdef unsigned int masks[MAXV]
    cdef unsigned int bits[MAXK * MAXK]
    cdef int pu[MAXK * MAXK]
    cdef int pv[MAXK * MAXK]
    cdef int c[MAXK]
    cdef int i, j, p, npairs = k * (k - 1) // 2
    cdef unsigned int code
    cdef int base, d
    cdef long *deltas
    if k > MAXK or k > s:
        raise ValueError("pattern size out of range")
    _load(out, s, masks)
    _bits(k, bits)
    p = 0
    for i in range(k):
        for j in range(i + 1, k):
            pu[p] = i
            pv[p] = j
            p += 1
    deltas = <long *>malloc(s * s * sizeof(long))
    if deltas == NULL:
        raise MemoryError()
    try:
        for i in range(s * s):
            deltas[i] = 0
        for i in range(k):
            c[i] = i
        with nogil:
            while True:
                code = _code(masks, c, k, bits)
                base = 1 if table[code] else 0
                for p in range(npairs):
                    d = (1 if table[code ^ bits[p]] else 0) - base
                    if d:
                        deltas[c[pu[p]] * s + c[pv[p]]] += d
                if not _next_comb(c, k, s):
                    break
        return [deltas[i] for i in range(s * s)]
    finally:
        free(deltas)
