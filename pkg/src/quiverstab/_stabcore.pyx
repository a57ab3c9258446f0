# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled stability kernel: exhaustive subset slope checks in C.

Twin of `quiverstab._stabcore_py`; see that module for the mask and
ordering conventions.  Callers must guarantee the weights fit the
64-bit fast path (the `_kernel` wrapper checks and falls back to the
pure version otherwise).
"""

from libc.stdlib cimport free, malloc


def first_violation(int n, unsigned long long right_mask, thetas):
    """(p, q, absolute_mask) of the first unstable pair, or None."""
    if n <= 0:
        return None
    if n > 20:
        raise ValueError("compiled kernel supports n <= 20")
    cdef long long *th = <long long *> malloc(n * sizeof(long long))
    cdef long long *prefix = <long long *> malloc((n + 1) * sizeof(long long))
    if th == NULL or prefix == NULL:
        free(th)
        free(prefix)
        raise MemoryError()
    cdef int i
    for i in range(n):
        th[i] = thetas[i]
    prefix[0] = 0
    for i in range(n):
        prefix[i + 1] = prefix[i] + th[i]

    cdef int p, q, length, j
    cdef unsigned long long rloc, lloc, mask, full, size, low, rest
    cdef long long w_total
    cdef long long *wt = NULL
    cdef long long *rk = NULL
    cdef int result_p = 0, result_q = 0
    cdef unsigned long long result_mask = 0
    cdef bint found = False

    try:
        for p in range(1, n + 1):
            if found:
                break
            for q in range(p, n + 1):
                length = q - p + 1
                if length == 1:
                    continue
                w_total = prefix[q] - prefix[p - 1]
                rloc = 0
                lloc = 0
                for j in range(length - 1):
                    if (right_mask >> (p - 1 + j)) & 1:
                        rloc |= (<unsigned long long> 1) << j
                    else:
                        lloc |= (<unsigned long long> 1) << j
                size = (<unsigned long long> 1) << length
                wt = <long long *> malloc(size * sizeof(long long))
                rk = <long long *> malloc(size * sizeof(long long))
                if wt == NULL or rk == NULL:
                    free(wt)
                    free(rk)
                    raise MemoryError()
                wt[0] = 0
                rk[0] = 0
                for mask in range(1, size):
                    low = mask & (~mask + 1)
                    rest = mask ^ low
                    j = 0
                    while (low >> j) != 1:
                        j += 1
                    wt[mask] = wt[rest] + th[p - 1 + j]
                    rk[mask] = rk[rest] + 1
                full = size - 1
                for mask in range(1, full):
                    if (mask & rloc) & (~(mask >> 1)):
                        continue
                    if ((mask >> 1) & lloc) & (~mask):
                        continue
                    if wt[mask] * length >= w_total * rk[mask]:
                        result_p = p
                        result_q = q
                        result_mask = mask << (p - 1)
                        found = True
                        break
                free(wt)
                free(rk)
                wt = NULL
                rk = NULL
                if found:
                    break
    finally:
        free(th)
        free(prefix)
        free(wt)
        free(rk)

    if found:
        return (result_p, result_q, int(result_mask))
    return None
