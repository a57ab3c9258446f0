"""Exact polyhedral computations on the stabilizing-weight region.

The open region carved out by the strict inequalities f(theta) > 0 is a
full-dimensional cone whenever some integer point satisfies them all;
its closure is the corresponding closed polyhedral cone.  Membership,
interior-point search and irredundancy all run over exact integers and
rationals; strict homogeneous systems are searched as {f >= 1}, which
loses nothing because any rational strict solution scales up.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError, ResourceLimitError
from .quiver import QuiverAn
from .stability import _forms_for

DEFAULT_MAX_FORMS = 100_000
MAX_FORMS_ENV = "QUIVERSTAB_MAX_FORMS"


def _max_forms() -> int:
    raw = os.environ.get(MAX_FORMS_ENV, "")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise DomainError(f"{MAX_FORMS_ENV} must be an integer, got {raw!r}")
        if value <= 0:
            raise DomainError(f"{MAX_FORMS_ENV} must be positive, got {value}")
        return value
    return DEFAULT_MAX_FORMS


@dataclass(frozen=True)
class ConeDescription:
    """A finite set of integer forms, each read as f(theta) > 0.

    The closed cone replaces > with >=.  An empty form set is all of
    weight space.
    """

    n: int
    forms: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"n": self.n, "forms": [list(f) for f in self.forms]}


def cone_of(quiver: QuiverAn, intervals=None) -> ConeDescription:
    """Stabilizing cone for a set of intervals (default: all of them).

    Raises DomainError on an explicitly empty interval set.
    """
    if intervals is None:
        from .quiver import enumerate_indecomposables

        intervals = enumerate_indecomposables(quiver)
    else:
        intervals = tuple(intervals)
        if not intervals:
            raise DomainError("interval set must be non-empty")
    return ConeDescription(
        n=quiver.n, forms=tuple(sorted(_forms_for(quiver, intervals)))
    )


def contains(cone: ConeDescription, thetas, strict: bool) -> bool:
    """Membership in the open region (strict) or its closure."""
    if len(thetas) != cone.n:
        raise DomainError(f"expected {cone.n} weights, got {len(thetas)}")
    for form in cone.forms:
        value = sum(c * t for c, t in zip(form, thetas))
        if strict and value <= 0:
            return False
        if not strict and value < 0:
            return False
    return True


# A row is (coeffs, bound) meaning coeffs . x >= bound, with integer
# coefficients and a Fraction bound.  Rows are stored in a dict keyed by
# the gcd-normalized coefficient vector, keeping only the largest bound
# per direction (the dominant constraint).


def _normalize_row(coeffs, bound):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0:
        return None, bound  # constant row
    return tuple(c // g for c in coeffs), Fraction(bound, g)


def _add_row(rows: dict, coeffs, bound) -> bool:
    """Insert a row, keeping the dominant bound.  False means infeasible."""
    key, b = _normalize_row(coeffs, bound)
    if key is None:
        return b <= 0
    old = rows.get(key)
    if old is None or b > old:
        rows[key] = b
    return True


def _eliminate(rows: dict, var: int, cap: int) -> dict | None:
    """One Fourier-Motzkin step.  None signals infeasibility."""
    pos = []
    neg = []
    nxt: dict = {}
    for coeffs, bound in rows.items():
        a = coeffs[var]
        if a > 0:
            pos.append((coeffs, bound))
        elif a < 0:
            neg.append((coeffs, bound))
        else:
            nxt[coeffs] = bound
    for cp, bp in pos:
        ap = cp[var]
        for cn, bn in neg:
            an = -cn[var]
            coeffs = tuple(an * x + ap * y for x, y in zip(cp, cn))
            bound = an * bp + ap * bn
            if not _add_row(nxt, coeffs, bound):
                return None
            if len(nxt) > cap:
                raise ResourceLimitError(
                    f"Fourier-Motzkin exceeded {cap} intermediate forms"
                    f" (override with {MAX_FORMS_ENV})"
                )
    return nxt


def _pick_var(rows: dict, remaining) -> int:
    """Next variable to eliminate: fewest product rows, lowest index ties."""
    best = None
    best_cost = None
    for var in remaining:
        npos = nneg = 0
        for coeffs in rows:
            a = coeffs[var]
            if a > 0:
                npos += 1
            elif a < 0:
                nneg += 1
        cost = npos * nneg - npos - nneg
        if best_cost is None or cost < best_cost:
            best = var
            best_cost = cost
    return best


def _fm_feasible(initial_rows, n: int) -> bool:
    """Exact feasibility of {coeffs . x >= bound} by elimination."""
    cap = _max_forms()
    rows: dict = {}
    for coeffs, bound in initial_rows:
        if not _add_row(rows, coeffs, bound):
            return False
    remaining = list(range(n))
    while remaining:
        var = _pick_var(rows, remaining)
        remaining.remove(var)
        result = _eliminate(rows, var, cap)
        if result is None:
            return False
        rows = result
    return True


def _fm_solve(initial_rows, n: int):
    """A rational solution of {coeffs . x >= bound}, or None."""
    cap = _max_forms()
    rows: dict = {}
    for coeffs, bound in initial_rows:
        if not _add_row(rows, coeffs, bound):
            return None
    stages = []  # (var, rows before eliminating var)
    remaining = list(range(n))
    while remaining:
        var = _pick_var(rows, remaining)
        remaining.remove(var)
        stages.append((var, rows))
        result = _eliminate(rows, var, cap)
        if result is None:
            return None
        rows = result
    values: dict[int, Fraction] = {}
    for var, stage_rows in reversed(stages):
        lo = None
        hi = None
        for coeffs, bound in stage_rows.items():
            a = coeffs[var]
            if a == 0:
                continue  # carried unchanged into a later stage
            rest = Fraction(bound) - sum(
                coeffs[j] * values[j] for j in values if coeffs[j]
            )
            edge = rest / a
            if a > 0:
                if lo is None or edge > lo:
                    lo = edge
            else:
                if hi is None or edge < hi:
                    hi = edge
        if lo is not None and hi is not None and lo > hi:
            raise AssertionError("back-substitution window empty; unreachable")
        if lo is not None and lo > 0:
            values[var] = lo
        elif hi is not None and hi < 0:
            values[var] = hi
        else:
            values[var] = Fraction(0)
    return [values[i] for i in range(n)]


def feasible_interior(cone: ConeDescription):
    """An integer point with every form strictly positive, or None.

    Solves {f >= 1} over exact rationals by Fourier-Motzkin elimination
    and clears denominators; scaling preserves f >= 1.
    """
    if not cone.forms:
        return tuple([0] * cone.n)
    rows = [(form, 1) for form in cone.forms]
    solution = _fm_solve(rows, cone.n)
    if solution is None:
        return None
    scale = lcm(*[f.denominator for f in solution]) if solution else 1
    point = tuple(int(f * scale) for f in solution)
    if not contains(cone, point, strict=True):
        raise AssertionError("interior point failed verification; unreachable")
    return point


def irredundant_forms(cone: ConeDescription) -> tuple[tuple[int, ...], ...]:
    """The forms whose removal would enlarge the open region.

    A form f is redundant iff {g >= 1 for the other forms, f <= -1} is
    infeasible.  Redundant forms are removed one at a time against the
    current kept set, so jointly redundant families are handled; each
    survivor supports a maximal-dimension face of the closed cone.
    Requires a full-dimensional cone.
    """
    if feasible_interior(cone) is None:
        raise DomainError("cone has empty interior; walls are undefined")
    kept = list(cone.forms)
    for form in list(kept):
        others = [g for g in kept if g != form]
        rows = [(g, 1) for g in others]
        rows.append((tuple(-c for c in form), 1))
        if not _fm_feasible(rows, cone.n):
            kept.remove(form)
    return tuple(kept)
