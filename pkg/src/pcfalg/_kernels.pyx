# cython: language_level=3, boundscheck=False, wraparound=False
"""int64 word kernels.  Each returns None when an input is not a machine
integer or an intermediate value could overflow; callers then fall back to
the generic Python versions."""

from libc.stdlib cimport free, malloc

DEF SMALL = 64

cdef long long ADD_LIM = 1LL << 61
cdef long long MUL_LIM = 1LL << 30


cdef bint _load(seq, long long* buf, long long lim):
    cdef Py_ssize_t i = 0
    cdef long long x
    for v in seq:
        if type(v) is not int:
            return False
        try:
            x = v
        except OverflowError:
            return False
        if x >= lim or x <= -lim:
            return False
        buf[i] = x
        i += 1
    return True


cdef long long* _buffer(Py_ssize_t n, long long* small):
    if n <= SMALL:
        return small
    cdef long long* p = <long long*>malloc(n * sizeof(long long))
    if p == NULL:
        raise MemoryError()
    return p


cdef inline void _release(long long* p, long long* small):
    if p != small:
        free(p)


def reduce_word(seq):
    cdef Py_ssize_t n = len(seq), top = 0, i
    cdef long long small_buf[SMALL]
    cdef long long small_st[SMALL]
    cdef long long c, x
    if n == 0:
        return []
    cdef long long* buf = _buffer(n, small_buf)
    cdef long long* st = _buffer(n, small_st)
    try:
        if not _load(seq, buf, ADD_LIM):
            return None
        for i in range(n):
            c = buf[i]
            if top >= 2 and st[top - 1] == 0:
                x = st[top - 2] + c
                if x >= ADD_LIM or x <= -ADD_LIM:
                    return None
                st[top - 2] = x
                top -= 1
            else:
                st[top] = c
                top += 1
        return [st[i] for i in range(top)]
    finally:
        _release(buf, small_buf)
        _release(st, small_st)


cdef bint _fold(long long* buf, Py_ssize_t n, long long* out):
    cdef long long a = 1, b = 0, c = 0, d = 1, x, na, nc
    cdef Py_ssize_t i
    for i in range(n):
        x = buf[i]
        if not (-MUL_LIM < a < MUL_LIM and -MUL_LIM < c < MUL_LIM):
            return False
        na = a * x + b
        nc = c * x + d
        b = a
        d = c
        a = na
        c = nc
    out[0] = a
    out[1] = b
    out[2] = c
    out[3] = d
    return True


def fold_word(seq):
    cdef Py_ssize_t n = len(seq)
    cdef long long small[SMALL]
    cdef long long m[4]
    cdef long long* buf = _buffer(n, small)
    try:
        if not _load(seq, buf, MUL_LIM) or not _fold(buf, n, m):
            return None
        return m[0], m[1], m[2], m[3]
    finally:
        _release(buf, small)


def prefix_columns(seq):
    cdef Py_ssize_t n = len(seq), i
    cdef long long small[SMALL]
    cdef long long p = 1, pp = 0, q = 0, qq = 1, x, np_, nq
    cdef long long* buf = _buffer(n, small)
    try:
        if not _load(seq, buf, MUL_LIM):
            return None
        out = []
        for i in range(n):
            x = buf[i]
            if not (-MUL_LIM < p < MUL_LIM and -MUL_LIM < q < MUL_LIM):
                return None
            np_ = p * x + pp
            nq = q * x + qq
            pp = p
            qq = q
            p = np_
            q = nq
            out.append((p, q))
        return out
    finally:
        _release(buf, small)


def rotation_mats(seq):
    cdef Py_ssize_t n = len(seq), i
    cdef long long small[SMALL]
    cdef long long m[4]
    cdef long long r, s, t, u, a, r2, s2, t2, u2
    cdef long long* buf = _buffer(n, small)
    try:
        if not _load(seq, buf, MUL_LIM) or not _fold(buf, n, m):
            return None
        r, s, t, u = m[0], m[1], m[2], m[3]
        out = []
        for i in range(n):
            a = buf[i]
            if not (-MUL_LIM < r < MUL_LIM and -MUL_LIM < s < MUL_LIM
                    and -MUL_LIM < t < MUL_LIM and -MUL_LIM < u < MUL_LIM):
                return None
            r2 = t
            s2 = u
            t2 = r - a * t
            u2 = s - a * u
            if not (-MUL_LIM < r2 < MUL_LIM and -MUL_LIM < t2 < MUL_LIM):
                return None
            r = r2 * a + s2
            s = r2
            t = t2 * a + u2
            u = t2
            out.append((r, s, t, u))
        return out
    finally:
        _release(buf, small)
