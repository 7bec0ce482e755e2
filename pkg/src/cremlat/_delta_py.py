"""Pure-Python quadruple-scan kernel.

Mirrors the compiled kernel in _delta_cy.pyx; selected at import time when
the extension is unavailable or the scaled distances overflow 64 bits.
Arbitrary-precision Python ints, so no overflow concerns here.
"""

from __future__ import annotations

from typing import List, Sequence


def max_defect(d: Sequence[Sequence[int]]) -> int:
    """Largest difference of the two largest pair-sums over all quadruples.

    For each quadruple i<j<k<l the three pairings are d[i][j]+d[k][l],
    d[i][k]+d[j][l], d[i][l]+d[j][k]; the defect is (largest - second
    largest).  Returns the maximum defect, 0 for fewer than four points.
    """
    n = len(d)
    best = 0
    rows: List[Sequence[int]] = [list(row) for row in d]
    for i in range(n - 3):
        di = rows[i]
        for j in range(i + 1, n - 2):
            dj = rows[j]
            dij = di[j]
            for k in range(j + 1, n - 1):
                dk = rows[k]
                dik = di[k]
                djk = dj[k]
                for l in range(k + 1, n):
                    s1 = dij + dk[l]
                    s2 = dik + dj[l]
                    s3 = di[l] + djk
                    if s1 >= s2:
                        hi, mid = s1, s2
                    else:
                        hi, mid = s2, s1
                    if s3 > hi:
                        mid = hi
                        hi = s3
                    elif s3 > mid:
                        mid = s3
                    if hi - mid > best:
                        best = hi - mid
    return best
