# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled quadruple-scan kernel; pure-Python twin lives in _delta_py."""


def max_defect(long long[:, ::1] d):
    """Largest difference of the two largest pair-sums over all quadruples.

    Caller guarantees the entries are int64 and that pair-sums cannot
    overflow (values are pre-checked against 2^62).
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i, j, k, l
    cdef long long s1, s2, s3, hi, mid, best = 0
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            for k in range(j + 1, n - 1):
                for l in range(k + 1, n):
                    s1 = d[i, j] + d[k, l]
                    s2 = d[i, k] + d[j, l]
                    s3 = d[i, l] + d[j, k]
                    if s1 >= s2:
                        hi = s1
                        mid = s2
                    else:
                        hi = s2
                        mid = s1
                    if s3 > hi:
                        mid = hi
                        hi = s3
                    elif s3 > mid:
                        mid = s3
                    if hi - mid > best:
                        best = hi - mid
    return best
