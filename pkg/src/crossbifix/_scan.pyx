# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled odometer scan over Z_q^n.

Same contract as crossbifix._scan_py.find_candidates; that module is the
reference. Lookup tables are flattened into sorted C arrays and probed by
binary search, so the per-word cost is a handful of integer ops.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


cdef inline bint _sorted_contains(long long *vals, Py_ssize_t lo, Py_ssize_t hi,
                                  long long x) noexcept nogil:
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if vals[mid] < x:
            lo = mid + 1
        elif vals[mid] > x:
            hi = mid
        else:
            return True
    return False


def find_candidates(int q, int n, members, prefixes, suffixes,
                    long long limit=0, long long start=0):
    """Mirror of crossbifix._scan_py.find_candidates (see its docstring)."""
    if n < 2:
        raise ValueError("scan needs n >= 2")

    cdef long long total = 1
    cdef int i
    for i in range(n):
        total *= q

    pre_lists = [sorted(prefixes[j]) if j >= 1 else [] for j in range(n)]
    suf_lists = [sorted(suffixes[j]) if j >= 1 else [] for j in range(n)]
    member_list = sorted(members)

    cdef Py_ssize_t psize = 0
    cdef Py_ssize_t ssize = 0
    cdef int j
    for j in range(1, n):
        psize += len(pre_lists[j])
        ssize += len(suf_lists[j])
    cdef Py_ssize_t msize = len(member_list)

    cdef long long *pvals = <long long *> malloc(sizeof(long long) * (psize if psize else 1))
    cdef long long *svals = <long long *> malloc(sizeof(long long) * (ssize if ssize else 1))
    cdef long long *mvals = <long long *> malloc(sizeof(long long) * (msize if msize else 1))
    cdef Py_ssize_t *poff = <Py_ssize_t *> malloc(sizeof(Py_ssize_t) * (n + 1))
    cdef Py_ssize_t *soff = <Py_ssize_t *> malloc(sizeof(Py_ssize_t) * (n + 1))
    cdef int *digits = <int *> malloc(sizeof(int) * n)
    if not (pvals and svals and mvals and poff and soff and digits):
        free(pvals); free(svals); free(mvals); free(poff); free(soff); free(digits)
        raise MemoryError()

    cdef Py_ssize_t pos, r
    cdef long long pv, sv, pw, idx, examined
    cdef long long rem
    cdef bint overlap
    cdef int d
    try:
        pos = 0
        for j in range(n):
            poff[j] = pos
            for value in pre_lists[j]:
                pvals[pos] = value
                pos += 1
        poff[n] = pos
        pos = 0
        for j in range(n):
            soff[j] = pos
            for value in suf_lists[j]:
                svals[pos] = value
                pos += 1
        soff[n] = pos
        for r in range(msize):
            mvals[r] = member_list[r]

        rem = start
        for i in range(n - 1, -1, -1):
            digits[i] = <int> (rem % q)
            rem //= q

        found = []
        examined = 0
        idx = start
        while idx < total:
            overlap = False
            pv = 0
            sv = 0
            pw = 1
            for j in range(1, n):
                pv = pv * q + digits[j - 1]
                sv = digits[n - j] * pw + sv
                pw *= q
                if pv == sv:
                    overlap = True
                    break
                if _sorted_contains(svals, soff[j], soff[j + 1], pv):
                    overlap = True
                    break
                if _sorted_contains(pvals, poff[j], poff[j + 1], sv):
                    overlap = True
                    break
            if overlap:
                examined += 1
            elif not _sorted_contains(mvals, 0, msize, idx):
                examined += 1
                found.append(idx)
                if limit > 0 and <long long> len(found) >= limit:
                    break
            d = n - 1
            while d >= 0:
                digits[d] += 1
                if digits[d] == q:
                    digits[d] = 0
                    d -= 1
                else:
                    break
            idx += 1
        return found, examined
    finally:
        free(pvals)
        free(svals)
        free(mvals)
        free(poff)
        free(soff)
        free(digits)
