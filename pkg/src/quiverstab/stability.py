"""Subrepresentations of thin representations and slope-stability checks.

A subrepresentation of a thin representation with identity arrow maps is
exactly an arrow-closed subset of its support: once the source space of
an identity arrow is included, the image forces the target space in too.
This reduction is cross-validated against the finite-field oracle module
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _kernel
from .errors import DomainError
from .quiver import IntervalRep, QuiverAn, dimension_vector, enumerate_indecomposables
from .weights import EQUAL, GREATER, Weights, slope_cmp

SubrepSupport = tuple[int, ...]

CMP_NAMES = {EQUAL: "equal", GREATER: "greater"}


def _mask_to_vertices(mask: int) -> SubrepSupport:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_interval(quiver: QuiverAn, rep: IntervalRep) -> None:
    if rep.q > quiver.n:
        raise DomainError(
            f"interval [{rep.p}, {rep.q}] does not fit in A_{quiver.n}"
        )


def enumerate_subrep_supports(
    quiver: QuiverAn, rep: IntervalRep
) -> tuple[SubrepSupport, ...]:
    """All arrow-closed subsets of [p, q], empty and full included.

    Order is deterministic: ascending bitmask with bit j standing for
    vertex p+j.
    """
    _check_interval(quiver, rep)
    masks = _kernel.closed_subset_masks(quiver.n, quiver.right_mask, rep.p, rep.q)
    return tuple(_mask_to_vertices(m) for m in masks)


@dataclass(frozen=True)
class IntervalVerdict:
    """Stability verdict for one interval, with a witness when unstable."""

    p: int
    q: int
    stable: bool
    witness: SubrepSupport | None = None
    comparison: str | None = None  # "equal" or "greater" when unstable

    def to_json(self) -> dict:
        payload = {"p": self.p, "q": self.q, "stable": self.stable}
        if self.witness is None:
            payload["witness"] = None
        else:
            payload["witness"] = {
                "vertices": list(self.witness),
                "comparison": self.comparison,
            }
        return payload


def is_stable(quiver: QuiverAn, thetas: Weights, rep: IntervalRep) -> IntervalVerdict:
    """Check that every proper non-zero subrepresentation has smaller slope.

    The witness, when present, is the first violating subset in ascending
    bitmask order.
    """
    _check_interval(quiver, rep)
    n = quiver.n
    d_total = dimension_vector(rep, n)
    masks = _kernel.closed_subset_masks(n, quiver.right_mask, rep.p, rep.q)
    full = masks[-1]
    for mask in masks:
        if mask == 0 or mask == full:
            continue
        d_sub = tuple((mask >> i) & 1 for i in range(n))
        cmp = slope_cmp(thetas, d_sub, d_total)
        if cmp != -1:
            return IntervalVerdict(
                rep.p, rep.q, False, _mask_to_vertices(mask), CMP_NAMES[cmp]
            )
    return IntervalVerdict(rep.p, rep.q, True)


def is_semistable(quiver: QuiverAn, thetas: Weights, rep: IntervalRep) -> bool:
    """Like is_stable but allowing equal slopes."""
    _check_interval(quiver, rep)
    n = quiver.n
    d_total = dimension_vector(rep, n)
    masks = _kernel.closed_subset_masks(n, quiver.right_mask, rep.p, rep.q)
    full = masks[-1]
    for mask in masks:
        if mask == 0 or mask == full:
            continue
        d_sub = tuple((mask >> i) & 1 for i in range(n))
        if slope_cmp(thetas, d_sub, d_total) == GREATER:
            return False
    return True


@dataclass(frozen=True)
class StabilityReport:
    """Per-interval verdicts for one weight system on one orientation."""

    quiver: QuiverAn
    thetas: Weights
    verdicts: tuple[IntervalVerdict, ...]

    @property
    def all_stable(self) -> bool:
        return all(v.stable for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.word,
            "thetas": list(self.thetas),
            "all_stable": self.all_stable,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def verify_reineke(quiver: QuiverAn, thetas: Weights) -> StabilityReport:
    """Run is_stable over every interval and collect the verdicts."""
    verdicts = tuple(
        is_stable(quiver, thetas, rep) for rep in enumerate_indecomposables(quiver)
    )
    return StabilityReport(quiver=quiver, thetas=tuple(thetas), verdicts=verdicts)


def all_indecomposables_stable(quiver: QuiverAn, thetas: Weights) -> bool:
    """Fast all-or-nothing version of verify_reineke (kernel hot path)."""
    return (
        _kernel.first_violation(quiver.n, quiver.right_mask, tuple(thetas)) is None
    )


def first_unstable(quiver: QuiverAn, thetas: Weights) -> IntervalVerdict | None:
    """First unstable interval with its witness, or None if all stable."""
    hit = _kernel.first_violation(quiver.n, quiver.right_mask, tuple(thetas))
    if hit is None:
        return None
    p, q, mask = hit
    n = quiver.n
    d_sub = tuple((mask >> i) & 1 for i in range(n))
    d_total = dimension_vector(IntervalRep(p, q), n)
    cmp = slope_cmp(thetas, d_sub, d_total)
    return IntervalVerdict(p, q, False, _mask_to_vertices(mask), CMP_NAMES[cmp])


def _components(support) -> list[tuple[int, ...]]:
    vs = sorted(set(support))
    comps: list[list[int]] = []
    for v in vs:
        if comps and v == comps[-1][-1] + 1:
            comps[-1].append(v)
        else:
            comps.append([v])
    return [tuple(c) for c in comps]


def decomposable_never_stable(
    quiver: QuiverAn, thetas: Weights, support
) -> SubrepSupport:
    """Witness that a decomposable thin representation is never stable.

    The support must split into at least two components.  Each component
    is a subrepresentation, and since the total slope is a weighted
    mediant of the component slopes, some component reaches at least the
    total slope.  Returns the leftmost such component.
    """
    comps = _components(support)
    if len(comps) < 2:
        raise DomainError("support is contiguous; thin representation is indecomposable")
    vs = sorted(set(support))
    if vs[0] < 1 or vs[-1] > quiver.n:
        raise DomainError(f"support {vs} not within 1..{quiver.n}")
    w_total = sum(thetas[v - 1] for v in vs)
    r_total = len(vs)
    for comp in comps:
        w_c = sum(thetas[v - 1] for v in comp)
        if w_c * r_total >= w_total * len(comp):
            return comp
    raise AssertionError("mediant inequality violated; unreachable")


def _thin_subrep_masks(quiver: QuiverAn, support: tuple[int, ...]) -> list[int]:
    """Masks over support positions closed under arrows inside the support."""
    index = {v: i for i, v in enumerate(support)}
    constraints = []  # (source position, target position)
    for s, t in quiver.arrows():
        if s in index and t in index and abs(s - t) == 1:
            constraints.append((index[s], index[t]))
    out = []
    for mask in range(1 << len(support)):
        if all(not ((mask >> s) & 1) or ((mask >> t) & 1) for s, t in constraints):
            out.append(mask)
    return out


def thin_polystability_check(quiver: QuiverAn, thetas: Weights, support) -> bool:
    """Semistable thin representations split into equal-slope stable pieces.

    Requires a weight system under which every interval is stable.  If
    the thin representation on `support` is semistable, all its
    components must share one slope and each must be stable; otherwise
    the claim holds vacuously.
    """
    if not all_indecomposables_stable(quiver, thetas):
        raise DomainError("weight system does not stabilize all indecomposables")
    vs = tuple(sorted(set(support)))
    if not vs:
        return True
    if vs[0] < 1 or vs[-1] > quiver.n:
        raise DomainError(f"support {vs} not within 1..{quiver.n}")
    w_total = sum(thetas[v - 1] for v in vs)
    r_total = len(vs)
    semistable = True
    for mask in _thin_subrep_masks(quiver, vs):
        if mask == 0:
            continue
        w_s = sum(thetas[vs[i] - 1] for i in range(len(vs)) if (mask >> i) & 1)
        r_s = mask.bit_count()
        if w_s * r_total > w_total * r_s:
            semistable = False
            break
    if not semistable:
        return True
    comps = _components(vs)
    for comp in comps:
        w_c = sum(thetas[v - 1] for v in comp)
        if w_c * r_total != w_total * len(comp):
            return False
        if not is_stable(quiver, thetas, IntervalRep(comp[0], comp[-1])).stable:
            return False
    return True


def _forms_for(quiver: QuiverAn, reps) -> set[tuple[int, ...]]:
    """Normalized deduplicated slope inequalities for the given intervals."""
    n = quiver.n
    seen: set[tuple[int, ...]] = set()
    for rep in reps:
        _check_interval(quiver, rep)
        masks = _kernel.closed_subset_masks(n, quiver.right_mask, rep.p, rep.q)
        full = masks[-1]
        r_x = rep.length
        for mask in masks:
            if mask == 0 or mask == full:
                continue
            r_s = mask.bit_count()
            g = gcd(r_s, r_x)
            coeffs = []
            for i in range(1, n + 1):
                c = 0
                if rep.p <= i <= rep.q:
                    c = r_s
                    if (mask >> (i - 1)) & 1:
                        c -= r_x
                coeffs.append(c // g)
            seen.add(tuple(coeffs))
    return seen


def stability_inequalities(quiver: QuiverAn) -> tuple[tuple[int, ...], ...]:
    """Integer forms f with f(theta) > 0 iff every interval is stable.

    One form per (interval, proper non-zero arrow-closed subset) pair:
    the coefficient at vertex i is r(S) * d_i(X) - r(X) * d_i(S).  Forms
    are divided by their gcd and deduplicated; redundant forms are kept
    (the cone module owns irredundancy).  Output is sorted.
    """
    return tuple(sorted(_forms_for(quiver, enumerate_indecomposables(quiver))))
