"""Canonical stabilizing weights and exact slope comparisons.

The canonical ("intrinsic") weight system assigns each vertex an integer
from its class and left/right counts:

    class I   (source):           l + r + 2*l*r
    class II  (sink):           -(l + r + 2*l*r)
    class III (left-to-right):    r - l
    class IV  (right-to-left):    l - r

Slopes weight/rank are never materialized; all comparisons go through
integer cross-multiplication, so there is no floating point anywhere.
"""

from __future__ import annotations

from .errors import DomainError
from .quiver import TYPE_I, TYPE_II, TYPE_III, QuiverAn, classify_vertices

Weights = tuple[int, ...]

LESS = -1
EQUAL = 0
GREATER = 1


def intrinsic_weights(quiver: QuiverAn) -> Weights:
    """The canonical weight system, one integer per vertex."""
    out = []
    for ctx in classify_vertices(quiver):
        l, r = ctx.l, ctx.r
        if ctx.vtype == TYPE_I:
            out.append(l + r + 2 * l * r)
        elif ctx.vtype == TYPE_II:
            out.append(-(l + r + 2 * l * r))
        elif ctx.vtype == TYPE_III:
            out.append(r - l)
        else:
            out.append(l - r)
    return tuple(out)


def intrinsic_weights_via_subquivers(quiver: QuiverAn) -> Weights:
    """Recompute the canonical weights by summing over interval subquivers.

    Every connected subquiver [a, b] contributes, at each of its vertices,
    the number of its arrows starting there minus the number terminating
    there.  Summing the contributions over all n(n+1)/2 intervals must
    reproduce intrinsic_weights; this is kept as an independent
    construction (no shortcut formula) for cross-checking.
    """
    n = quiver.n
    thetas = [0] * n
    arrows = quiver.arrows()
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for e in range(a - 1, b - 1):
                s, t = arrows[e]
                thetas[s - 1] += 1
                thetas[t - 1] -= 1
    return tuple(thetas)


def weight_of(thetas: Weights, d) -> int:
    """Weight of a dimension vector: sum of theta_i * d_i."""
    if len(thetas) != len(d):
        raise DomainError(
            f"weight/dimension length mismatch: {len(thetas)} vs {len(d)}"
        )
    return sum(t * x for t, x in zip(thetas, d))


def rank_of(d) -> int:
    """Total dimension: sum of the entries."""
    return sum(d)


def slope_cmp(thetas: Weights, d1, d2) -> int:
    """Compare weight/rank slopes of two dimension vectors exactly.

    Returns -1, 0 or 1.  Both ranks must be positive; comparison is by
    integer cross-multiplication.
    """
    r1 = rank_of(d1)
    r2 = rank_of(d2)
    if r1 <= 0 or r2 <= 0:
        raise DomainError("slope undefined for rank-zero representation")
    lhs = weight_of(thetas, d1) * r2
    rhs = weight_of(thetas, d2) * r1
    if lhs < rhs:
        return LESS
    if lhs > rhs:
        return GREATER
    return EQUAL


def closed_subset_weight_value(quiver: QuiverAn, subset) -> int:
    """Total canonical weight of a contiguous arrow-closed vertex subset.

    For S = [a, b] with no arrow leaving it the value has the closed form
    -|S|*(l+r) - 2*l*r, where l and r count vertices strictly to the left
    and right of S.  Raises DomainError unless S is non-empty, contiguous
    and arrow-closed.
    """
    n = quiver.n
    vs = sorted(set(subset))
    if not vs:
        raise DomainError("subset must be non-empty")
    if vs[0] < 1 or vs[-1] > n:
        raise DomainError(f"subset {vs} not within 1..{n}")
    a, b = vs[0], vs[-1]
    if b - a + 1 != len(vs):
        raise DomainError(f"subset {vs} is not contiguous")
    if a > 1 and not quiver.right(a - 2):
        raise DomainError(f"arrow {a} -> {a - 1} leaves the subset")
    if b < n and quiver.right(b - 1):
        raise DomainError(f"arrow {b} -> {b + 1} leaves the subset")
    l = a - 1
    r = n - b
    return -len(vs) * (l + r) - 2 * l * r
