"""Pure-Python stability kernel.

Twin of the compiled module `quiverstab._stabcore`; the two must agree
bit for bit.  This version works with arbitrary-precision integers and
any n, so it also serves as the fallback when the inputs do not fit the
compiled kernel's 64-bit fast path.

Conventions shared by both kernels:

* vertices 1..n; `right_mask` has bit e set iff edge e (0-based, between
  vertices e+1 and e+2) points right;
* a subset of the interval [p, q] is encoded as a local bitmask with bit
  j standing for vertex p+j; absolute masks use bit i-1 for vertex i;
* a subset is arrow-closed iff no arrow inside [p, q] starts in the
  subset and ends outside it.
"""

from __future__ import annotations


def _local_edge_masks(right_mask: int, p: int, length: int) -> tuple[int, int]:
    rloc = 0
    lloc = 0
    for j in range(length - 1):
        if (right_mask >> (p - 1 + j)) & 1:
            rloc |= 1 << j
        else:
            lloc |= 1 << j
    return rloc, lloc


def closed_subset_masks(n: int, right_mask: int, p: int, q: int) -> list[int]:
    """Absolute bitmasks of all arrow-closed subsets of [p, q], ascending.

    Includes the empty set and the full interval.
    """
    length = q - p + 1
    rloc, lloc = _local_edge_masks(right_mask, p, length)
    shift = p - 1
    out = []
    for mask in range(1 << length):
        if (mask & rloc) & ~(mask >> 1):
            continue
        if (mask >> 1) & lloc & ~mask:
            continue
        out.append(mask << shift)
    return out


def first_violation(n, right_mask, thetas):
    """First (interval, subset) pair violating strict slope stability.

    Scans intervals [p, q] in lexicographic order and, within each, the
    arrow-closed proper non-empty subsets in ascending local-mask order.
    A pair violates iff w(S) * r(X) >= w(X) * r(S).  Returns
    (p, q, absolute_mask) for the first violation, or None if every
    interval is stable under `thetas`.
    """
    prefix = [0] * (n + 1)
    for i, t in enumerate(thetas):
        prefix[i + 1] = prefix[i] + t
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            length = q - p + 1
            if length == 1:
                continue  # no proper non-zero subrepresentations
            w_total = prefix[q] - prefix[p - 1]
            r_total = length
            rloc, lloc = _local_edge_masks(right_mask, p, length)
            local = thetas[p - 1 : q]
            size = 1 << length
            wt = [0] * size
            rk = [0] * size
            for mask in range(1, size):
                low = mask & -mask
                rest = mask ^ low
                wt[mask] = wt[rest] + local[low.bit_length() - 1]
                rk[mask] = rk[rest] + 1
            full = size - 1
            for mask in range(1, full):
                if (mask & rloc) & ~(mask >> 1):
                    continue
                if (mask >> 1) & lloc & ~mask:
                    continue
                if wt[mask] * r_total >= w_total * rk[mask]:
                    return (p, q, mask << (p - 1))
    return None
