# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled R-length search kernel; mirrors ``_rlength_py.rlength``."""

from libc.stdlib cimport malloc, free


cdef struct State:
    int *v
    int W
    int zero
    long f
    long g
    long h
    long e
    long l1


cdef inline long iabs(long x) nogil:
    return -x if x < 0 else x


cdef inline void account(State *s, int c, long x) nogil:
    cdef int idx
    if c < s.W:
        idx = c - s.zero
        s.f += x
        s.h -= idx * x
        if idx == 0:
            s.g += x
            s.e += x
        elif idx == -1:
            s.e -= x
    else:
        idx = c - s.W - s.zero
        s.f -= x
        s.h += idx * x
        if idx == 0:
            s.g -= x
            s.e -= x
        elif idx == 1:
            s.e += x


cdef inline void sub(State *s, int c, int d) nogil:
    cdef int old = s.v[c]
    cdef int new = old - d
    s.v[c] = new
    s.l1 += iabs(new) - iabs(old)
    account(s, c, -d)


cdef inline long heuristic(State *s) nogil:
    cdef long best = iabs(s.f)
    cdef long t = iabs(s.g)
    if t > best:
        best = t
    t = iabs(s.h)
    if t > best:
        best = t
    t = (iabs(s.e) + 1) // 2
    if t > best:
        best = t
    t = (s.l1 + 1) // 2
    if t > best:
        best = t
    return best


cdef int candidates(State *s, int p, int letter, int wlo, int whi,
                    int *gc, int *gd, int *glen) nogil:
    # up to five generators, two (coord, delta) pairs each
    cdef int W = s.W
    cdef int sigma
    cdef int n = 0
    if letter == 0:
        sigma = 1 if s.v[p] > 0 else -1
        if p == s.zero:
            gc[2 * n] = p; gd[2 * n] = sigma; glen[n] = 1; n += 1
        gc[2 * n] = p; gd[2 * n] = sigma
        gc[2 * n + 1] = W + p; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
        if p + 1 <= whi:
            gc[2 * n] = p; gd[2 * n] = sigma
            gc[2 * n + 1] = W + p + 1; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
            gc[2 * n] = p; gd[2 * n] = sigma
            gc[2 * n + 1] = p + 1; gd[2 * n + 1] = -sigma; glen[n] = 2; n += 1
        if p - 1 >= wlo:
            gc[2 * n] = p - 1; gd[2 * n] = -sigma
            gc[2 * n + 1] = p; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
    else:
        sigma = 1 if s.v[W + p] > 0 else -1
        if p == s.zero:
            gc[2 * n] = W + p; gd[2 * n] = sigma; glen[n] = 1; n += 1
        gc[2 * n] = p; gd[2 * n] = sigma
        gc[2 * n + 1] = W + p; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
        if p - 1 >= wlo:
            gc[2 * n] = p - 1; gd[2 * n] = sigma
            gc[2 * n + 1] = W + p; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
            gc[2 * n] = W + p - 1; gd[2 * n] = -sigma
            gc[2 * n + 1] = W + p; gd[2 * n + 1] = sigma; glen[n] = 2; n += 1
        if p + 1 <= whi:
            gc[2 * n] = W + p; gd[2 * n] = sigma
            gc[2 * n + 1] = W + p + 1; gd[2 * n + 1] = -sigma; glen[n] = 2; n += 1
    return n


cdef bint dfs(State *s, int remaining, int wlo, int whi) nogil:
    cdef int gc[10]
    cdef int gd[10]
    cdef int glen[5]
    cdef int p, letter, ng, i, j
    if s.l1 == 0:
        return True
    if heuristic(s) > remaining:
        return False
    letter = -1
    p = wlo
    while p <= whi:
        if s.v[p] != 0:
            letter = 0
            break
        if s.v[s.W + p] != 0:
            letter = 1
            break
        p += 1
    if letter < 0:
        return False
    ng = candidates(s, p, letter, wlo, whi, gc, gd, glen)
    for i in range(ng):
        for j in range(glen[i]):
            sub(s, gc[2 * i + j], gd[2 * i + j])
        if dfs(s, remaining - 1, wlo, whi):
            return True
        for j in range(glen[i]):
            sub(s, gc[2 * i + j], -gd[2 * i + j])
    return False


def rlength(coeffs, int width, int zero, int vlo, int vhi, int limit):
    """Iterative-deepening search; returns the R-length or -1 past ``limit``."""
    cdef State s
    cdef int n = 2 * width
    cdef int c, bound, wlo, whi
    cdef int result = -1
    cdef long x
    if len(coeffs) != n:
        raise ValueError("coefficient buffer must have length 2*width")
    s.v = <int *> malloc(n * sizeof(int))
    if s.v == NULL:
        raise MemoryError()
    try:
        s.W = width
        s.zero = zero
        s.f = s.g = s.h = s.e = s.l1 = 0
        for c in range(n):
            x = coeffs[c]
            s.v[c] = x
            if x != 0:
                account(&s, c, x)
                s.l1 += iabs(x)
        if s.l1 == 0:
            return 0
        with nogil:
            bound = heuristic(&s)
            while bound <= limit:
                wlo = vlo - bound
                if wlo < 0:
                    wlo = 0
                whi = vhi + bound
                if whi > width - 1:
                    whi = width - 1
                if dfs(&s, bound, wlo, whi):
                    result = bound
                    break
                bound += 1
        return result
    finally:
        free(s.v)
