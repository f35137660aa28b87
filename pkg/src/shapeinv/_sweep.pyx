# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled sweep over a lexicographic rank range of S_n."""
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

DEF MAXN = 14


cdef inline bint _next_permutation(int* a, int n) noexcept nogil:
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] > a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] < a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef inline int64_t _shape_code(const int* perm, int n, int* rows, int* lens) noexcept nogil:
    cdef int nrows = 0, i, r, x, lo, hi, mid, y
    cdef int64_t code = 0
    for i in range(n):
        x = perm[i]
        r = 0
        while True:
            if r == nrows:
                rows[r * MAXN] = x
                lens[r] = 1
                nrows += 1
                break
            # first entry larger than x
            lo = 0
            hi = lens[r]
            while lo < hi:
                mid = (lo + hi) >> 1
                if rows[r * MAXN + mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == lens[r]:
                rows[r * MAXN + lo] = x
                lens[r] += 1
                break
            y = rows[r * MAXN + lo]
            rows[r * MAXN + lo] = x
            x = y
            r += 1
    for r in range(nrows):
        code = code * (n + 1) + lens[r]
    return code


cdef inline int _inversions(const int* perm, int n) noexcept nogil:
    cdef uint64_t seen = 0
    cdef int i, inv = 0
    for i in range(n):
        inv += __builtin_popcountll(seen >> perm[i])
        seen |= (<uint64_t>1) << perm[i]
    return inv


def sweep_range(int n, start, count):
    """Counts keyed by ``(shape, inversions)`` over ranks ``start .. start+count-1``."""
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled sweep supports 1 <= n <= {MAXN}")
    from ._sweep_py import unrank
    cdef int perm[MAXN]
    cdef int rows[MAXN * MAXN]
    cdef int lens[MAXN]
    cdef int i
    cdef int64_t k, total = count
    cdef unordered_map[int64_t, int64_t] acc
    for i, v in enumerate(unrank(n, start)):
        perm[i] = v
    with nogil:
        for k in range(total):
            acc[_shape_code(perm, n, rows, lens) * 128 + _inversions(perm, n)] += 1
            if not _next_permutation(perm, n):
                break
    out = {}
    cdef unordered_map[int64_t, int64_t].iterator it = acc.begin()
    while it != acc.end():
        key = deref(it).first
        code, inv = divmod(key, 128)
        parts = []
        while code:
            code, part = divmod(code, n + 1)
            parts.append(part)
        out[tuple(sorted(parts, reverse=True)), inv] = deref(it).second
        inc(it)
    return out
