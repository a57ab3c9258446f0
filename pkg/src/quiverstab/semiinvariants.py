"""Euler pairing, interval weight systems, and determinant semi-invariants.

Two integer weight systems are attached to every interval X = [p, q]:
the "left" system pairs X against each simple on the left of the Euler
form, the "right" system is minus the pairing on the right.  Summing
left systems of simples row by row shows both families span weight
space over Z with determinant +-1, which is what the decomposition
search exploits.

Determinant semi-invariants are evaluated over a prime field: the
commutator-style square matrix attached to a pair of representations
with orthogonal dimension vectors, and the path-block matrix attached
to a weight system that pairs to zero with the dimension vector.  Under
base change g both determinants pick up the factor
prod det(g_i)^(-W_i), so the verified law is chi_W(g) * f(g . Y) = f(Y).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import fieldmath as fm
from .errors import DecompositionNotFoundError, DomainError
from .fforacle import FFRep, _random_rep, apply_group, thin_rep
from .quiver import (
    TYPE_I,
    TYPE_II,
    TYPE_III,
    TYPE_IV,
    IntervalRep,
    QuiverAn,
    classify_vertices,
    dimension_vector,
    enumerate_indecomposables,
)
from .weights import Weights, intrinsic_weights

MODE_LEFT = "left"
MODE_RIGHT = "right"


def euler_form(quiver: QuiverAn, dx, dy) -> int:
    """Euler pairing: sum dx_i dy_i minus one dx_s dy_t term per arrow."""
    if len(dx) != quiver.n or len(dy) != quiver.n:
        raise DomainError("dimension vectors do not match the quiver")
    total = sum(a * b for a, b in zip(dx, dy))
    for s, t in quiver.arrows():
        total -= dx[s - 1] * dy[t - 1]
    return total


def _entry(d, i: int) -> int:
    """d_i with out-of-range indices reading as 0 (1-based)."""
    if 1 <= i <= len(d):
        return d[i - 1]
    return 0


def weight_left(quiver: QuiverAn, rep: IntervalRep) -> Weights:
    """Weight system pairing the interval on the left of the Euler form.

    Entry i is computed branch by branch from the vertex class; it must
    (and by the tests does) agree with euler_form(d_X, e_i) for every i.
    """
    d = dimension_vector(rep, quiver.n)
    out = []
    for ctx in classify_vertices(quiver):
        i = ctx.index
        if ctx.vtype == TYPE_I:
            value = _entry(d, i)
        elif ctx.vtype == TYPE_II:
            value = _entry(d, i) - _entry(d, i - 1) - _entry(d, i + 1)
        elif ctx.vtype == TYPE_III:
            value = _entry(d, i) - _entry(d, i - 1)
        else:
            value = _entry(d, i) - _entry(d, i + 1)
        out.append(value)
    return tuple(out)


def weight_right(quiver: QuiverAn, rep: IntervalRep) -> Weights:
    """Weight system pairing the interval on the right, negated.

    Entry i must agree with -euler_form(e_i, d_Y) for every i.
    """
    d = dimension_vector(rep, quiver.n)
    out = []
    for ctx in classify_vertices(quiver):
        i = ctx.index
        if ctx.vtype == TYPE_I:
            value = -_entry(d, i) + _entry(d, i - 1) + _entry(d, i + 1)
        elif ctx.vtype == TYPE_II:
            value = -_entry(d, i)
        elif ctx.vtype == TYPE_III:
            value = -_entry(d, i) + _entry(d, i + 1)
        else:
            value = -_entry(d, i) + _entry(d, i - 1)
        out.append(value)
    return tuple(out)


def table_theta(quiver: QuiverAn, rep: IntervalRep):
    """Case-table values for the left weight system, None where the
    table has no row (the i = q < n case with p < q is a known gap)."""
    p, q = rep.p, rep.q
    out = []
    for ctx in classify_vertices(quiver):
        i, vt = ctx.index, ctx.vtype
        if i < p - 1 or i > q + 1:
            out.append(0)
        elif i == p - 1:
            out.append(0 if vt in (TYPE_I, TYPE_III) else -1)
        elif i == q + 1:
            out.append(0 if vt in (TYPE_I, TYPE_IV) else -1)
        elif p == q and i == p:
            out.append(1)
        elif i == p:
            out.append(1 if vt in (TYPE_I, TYPE_III) else 0)
        elif p < i < q:
            out.append({TYPE_I: 1, TYPE_II: -1, TYPE_III: 0, TYPE_IV: 0}[vt])
        else:  # i == q with p < q: absent from the table
            out.append(None)
    return tuple(out)


def table_theta_prime(quiver: QuiverAn, rep: IntervalRep):
    """Case-table values for the right weight system, None at the gap."""
    p, q = rep.p, rep.q
    out = []
    for ctx in classify_vertices(quiver):
        i, vt = ctx.index, ctx.vtype
        if i < p - 1 or i > q + 1:
            out.append(0)
        elif i == p - 1:
            out.append(1 if vt in (TYPE_I, TYPE_III) else 0)
        elif i == q + 1:
            out.append(1 if vt in (TYPE_I, TYPE_IV) else 0)
        elif p == q and i == p:
            out.append(-1)
        elif i == p:
            out.append(-1 if vt in (TYPE_II, TYPE_IV) else 0)
        elif p < i < q:
            out.append({TYPE_I: 1, TYPE_II: -1, TYPE_III: 0, TYPE_IV: 0}[vt])
        else:  # i == q with p < q: absent from the table
            out.append(None)
    return tuple(out)


@dataclass(frozen=True)
class Decomposition:
    """Non-negative integer interval coefficients reproducing a target."""

    mode: str
    coefficients: tuple[tuple[IntervalRep, int], ...]  # positive entries only

    def coefficient(self, rep: IntervalRep) -> int:
        for r, c in self.coefficients:
            if r == rep:
                return c
        return 0

    def to_json(self) -> dict:
        return {f"{r.p},{r.q}": c for r, c in self.coefficients}


def _generator(quiver: QuiverAn, mode: str, rep: IntervalRep) -> Weights:
    if mode == MODE_LEFT:
        return weight_left(quiver, rep)
    if mode == MODE_RIGHT:
        return weight_right(quiver, rep)
    raise DomainError(f"unknown mode {mode!r}")


def _coverage_profile(quiver: QuiverAn, mode: str, target) -> list[int]:
    """Solve sum_v m_v * W(simple at v) = target exactly.

    The simple-interval weight systems form a Z-basis (determinant +-1),
    so the rational solution is unique and integral.
    """
    n = quiver.n
    rows = [_generator(quiver, mode, IntervalRep(v, v)) for v in range(1, n + 1)]
    # solve A^T m = target over Q
    mat = [[Fraction(rows[v][i]) for v in range(n)] for i in range(n)]
    rhs = [Fraction(t) for t in target]
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            raise AssertionError("simple weight systems are a basis; unreachable")
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        rhs[col] *= inv
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                rhs[r] -= f * rhs[col]
    if any(x.denominator != 1 for x in rhs):
        raise AssertionError("profile must be integral; unreachable")
    return [int(x) for x in rhs]


def _coverage_search(n: int, profile, cap: int):
    """Interval multiplicities <= cap covering each vertex profile[v] times.

    Depth-first over intervals in lexicographic order, coefficients tried
    in ascending order, so the first hit is the lexicographically least
    solution with max coefficient <= cap.  Returns a dict or None.
    """
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p, n + 1)]
    cov = [0] * (n + 1)
    chosen: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> bool:
        if idx == len(intervals):
            return True
        p, q = intervals[idx]
        need_p = profile[p - 1] - cov[p]
        # intervals [p, q'] with q' > q are the only remaining ones at p
        lo = max(0, need_p - cap * (n - q))
        hi = min(cap, min(profile[v - 1] - cov[v] for v in range(p, q + 1)))
        if lo > hi:
            return False
        for c in range(lo, hi + 1):
            if c:
                for v in range(p, q + 1):
                    cov[v] += c
                chosen[(p, q)] = c
            if rec(idx + 1):
                return True
            if c:
                for v in range(p, q + 1):
                    cov[v] -= c
                del chosen[(p, q)]
        return False

    if rec(0):
        return dict(chosen)
    return None


def decompose_intrinsic(quiver: QuiverAn, mode: str = MODE_LEFT) -> Decomposition:
    """Write the canonical weights as a non-negative interval combination.

    Searches coefficient caps 0, 1, 2, ... (bounded by the sum of
    absolute weights) and within each cap depth-first over intervals in
    lexicographic order, so the result is the lexicographically least
    solution of minimal maximum coefficient.  Raises
    DecompositionNotFoundError when the bounded search is exhausted.
    """
    n = quiver.n
    target = intrinsic_weights(quiver)
    profile = _coverage_profile(quiver, mode, target)
    bound = sum(abs(t) for t in target)
    if min(profile, default=0) < 0:
        raise DecompositionNotFoundError(
            f"no non-negative decomposition exists (profile {profile})"
        )
    counts = [v * (n - v + 1) for v in range(1, n + 1)]
    start = 0
    for m, cnt in zip(profile, counts):
        start = max(start, -(-m // cnt))
    for cap in range(start, bound + 1):
        hit = _coverage_search(n, profile, cap)
        if hit is not None:
            coeffs = tuple(
                (IntervalRep(p, q), hit[(p, q)]) for p, q in sorted(hit)
            )
            dec = Decomposition(mode=mode, coefficients=coeffs)
            _check_reconstruction(quiver, dec, target)
            return dec
        if cap >= max(profile, default=0):
            break  # the all-simples solution fits by now; nothing was found
    raise DecompositionNotFoundError(
        f"no decomposition with coefficients <= {bound} found"
    )


def _check_reconstruction(quiver: QuiverAn, dec: Decomposition, target) -> None:
    total = [0] * quiver.n
    for rep, c in dec.coefficients:
        gen = _generator(quiver, dec.mode, rep)
        for i, g in enumerate(gen):
            total[i] += c * g
    if tuple(total) != tuple(target):
        raise AssertionError("decomposition failed to reconstruct; unreachable")


def support_restriction_check(quiver: QuiverAn, dec: Decomposition) -> bool:
    """Do all used intervals satisfy the endpoint class side conditions?

    Diagnostic only: a minimal decomposition may legitimately use other
    intervals.
    """
    types = {ctx.index: ctx.vtype for ctx in classify_vertices(quiver)}
    n = quiver.n

    def allowed_left(p: int, q: int) -> bool:
        if p == 1:
            return q != n and types[q] in (TYPE_I, TYPE_III)
        if types[p] in (TYPE_I, TYPE_IV):
            return q == n or types[q] in (TYPE_II, TYPE_IV)
        return q != n and types[q] in (TYPE_I, TYPE_III)

    def allowed_right(p: int, q: int) -> bool:
        if p == 1:
            return q != n and types[q] in (TYPE_II, TYPE_IV)
        if types[p] in (TYPE_II, TYPE_III):
            return q == n or types[q] in (TYPE_I, TYPE_III)
        return q != n and types[q] in (TYPE_II, TYPE_IV)

    allowed = allowed_left if dec.mode == MODE_LEFT else allowed_right
    return all(allowed(rep.p, rep.q) for rep, c in dec.coefficients if c > 0)


def hom_matrix(quiver: QuiverAn, x: FFRep, y: FFRep):
    """Matrix of (f_i) -> (f_t . X_a - Y_a . f_s) in matrix-unit bases.

    Columns: vertex by vertex, matrix units of Hom(X_i, Y_i) in row-major
    order.  Rows: arrow by arrow, matrix units of Hom(X_s, Y_t) in
    row-major order.  Returns (rows, nrows, ncols) over F_p.
    """
    x.validate(quiver)
    y.validate(quiver)
    if x.prime != y.prime:
        raise DomainError("representations live over different prime fields")
    p = x.prime
    n = quiver.n
    arrows = quiver.arrows()
    col_offsets = []
    total_cols = 0
    for i in range(n):
        col_offsets.append(total_cols)
        total_cols += y.dims[i] * x.dims[i]
    row_offsets = []
    total_rows = 0
    for s, t in arrows:
        row_offsets.append(total_rows)
        total_rows += y.dims[t - 1] * x.dims[s - 1]
    matrix = [[0] * total_cols for _ in range(total_rows)]
    for e, (s, t) in enumerate(arrows):
        base = row_offsets[e]
        dxs, dyt = x.dims[s - 1], y.dims[t - 1]
        # f_t . X_a contribution: unit E_rc of Hom(X_t, Y_t)
        for r in range(y.dims[t - 1]):
            for c in range(x.dims[t - 1]):
                col = col_offsets[t - 1] + r * x.dims[t - 1] + c
                for j in range(dxs):
                    row = base + r * dxs + j
                    matrix[row][col] = (matrix[row][col] + x.maps[e][c][j]) % p
        # -Y_a . f_s contribution: unit E_rc of Hom(X_s, Y_s)
        for r in range(y.dims[s - 1]):
            for c in range(x.dims[s - 1]):
                col = col_offsets[s - 1] + r * x.dims[s - 1] + c
                for u in range(dyt):
                    row = base + u * dxs + c
                    matrix[row][col] = (matrix[row][col] - y.maps[e][u][r]) % p
    return matrix, total_rows, total_cols


def c_semiinvariant(quiver: QuiverAn, x: FFRep, y: FFRep) -> int:
    """det of the hom matrix; defined only when the Euler pairing is 0."""
    pairing = euler_form(quiver, x.dims, y.dims)
    if pairing != 0:
        raise DomainError(
            f"hom matrix is not square: Euler pairing is {pairing}, expected 0"
        )
    matrix, nrows, ncols = hom_matrix(quiver, x, y)
    if nrows != ncols:
        raise AssertionError("square by Euler pairing; unreachable")
    return fm.mat_det(matrix, x.prime, nrows)


def hom_space_dim(quiver: QuiverAn, x: FFRep, y: FFRep) -> int:
    """dim Hom(X, Y), computed from the commuting constraints directly.

    Independent oracle for the kernel of the hom matrix: equations
    f_t . X_a = Y_a . f_s are assembled entry by entry and row-reduced.
    """
    x.validate(quiver)
    y.validate(quiver)
    if x.prime != y.prime:
        raise DomainError("representations live over different prime fields")
    p = x.prime
    n = quiver.n
    offsets = []
    total = 0
    for i in range(n):
        offsets.append(total)
        total += y.dims[i] * x.dims[i]
    equations = []
    for e, (s, t) in enumerate(quiver.arrows()):
        for u in range(y.dims[t - 1]):
            for v in range(x.dims[s - 1]):
                row = [0] * total
                # (f_t . X_a)[u][v] = sum_c f_t[u][c] X_a[c][v]
                for c in range(x.dims[t - 1]):
                    row[offsets[t - 1] + u * x.dims[t - 1] + c] += x.maps[e][c][v]
                # (Y_a . f_s)[u][v] = sum_r Y_a[u][r] f_s[r][v]
                for r in range(y.dims[s - 1]):
                    row[offsets[s - 1] + r * x.dims[s - 1] + v] -= y.maps[e][u][r]
                equations.append([z % p for z in row])
    return total - fm.mat_rank(equations, p, total)


def _path_matrix(quiver: QuiverAn, x: FFRep, i: int, j: int):
    """Composite map along the unique path i -> j, or None if absent."""
    if i == j:
        return None  # paths have at least one arrow
    p = x.prime
    if i < j:
        for e in range(i - 1, j - 1):
            if not quiver.right(e):
                return None
        result = [row[:] for row in x.maps[i - 1]]
        for e in range(i, j - 1):
            nxt = x.maps[e]
            result = fm.mat_mul(nxt, result, p, x.dims[e + 1], x.dims[e], x.dims[i - 1])
        return result
    for e in range(j - 1, i - 1):
        if quiver.right(e):
            return None
    result = [row[:] for row in x.maps[i - 2]]
    for e in range(i - 3, j - 2, -1):
        nxt = x.maps[e]
        result = fm.mat_mul(nxt, result, p, x.dims[e], x.dims[e + 1], x.dims[i - 1])
    return result


def det_a_semiinvariant(quiver: QuiverAn, thetas: Weights, x: FFRep) -> int:
    """Determinant of the path-block matrix attached to the weights.

    Columns stack theta_i^+ copies of X_i, rows stack theta_j^- copies of
    X_j; block (j, i) is the composite along the unique path i -> j when
    it exists and 0 otherwise.  Requires sum theta_i * dim X_i = 0.
    """
    x.validate(quiver)
    if len(thetas) != quiver.n:
        raise DomainError(f"expected {quiver.n} weights, got {len(thetas)}")
    pairing = sum(t * d for t, d in zip(thetas, x.dims))
    if pairing != 0:
        raise DomainError(
            f"weights pair to {pairing} with the dimension vector, expected 0;"
            " only the trivial semi-invariant exists"
        )
    p = x.prime
    n = quiver.n
    plus = [max(t, 0) for t in thetas]
    minus = [max(-t, 0) for t in thetas]
    cols = []  # vertex of each column block copy
    for i in range(1, n + 1):
        cols.extend([i] * plus[i - 1])
    rows = []
    for j in range(1, n + 1):
        rows.extend([j] * minus[j - 1])
    size = sum(x.dims[i - 1] for i in cols)
    if size != sum(x.dims[j - 1] for j in rows):
        raise AssertionError("pairing zero makes the matrix square; unreachable")
    matrix = [[0] * size for _ in range(size)]
    paths: dict[tuple[int, int], object] = {}
    row_base = 0
    for j in rows:
        col_base = 0
        for i in cols:
            key = (i, j)
            if key not in paths:
                paths[key] = _path_matrix(quiver, x, i, j)
            block = paths[key]
            if block is not None:
                for r in range(x.dims[j - 1]):
                    for c in range(x.dims[i - 1]):
                        matrix[row_base + r][col_base + c] = block[r][c] % p
            col_base += x.dims[i - 1]
        row_base += x.dims[j - 1]
    return fm.mat_det(matrix, p, size)


def character_value(thetas: Weights, blocks, prime: int) -> int:
    """prod det(g_i)^theta_i in F_p, inverting for negative exponents."""
    if len(blocks) != len(thetas):
        raise DomainError("one group block per weight entry required")
    result = 1
    for theta, block in zip(thetas, blocks):
        d = len(block)
        det = fm.mat_det(block, prime, d)
        if det == 0:
            raise DomainError("group block is singular")
        if theta >= 0:
            result = (result * pow(det, theta, prime)) % prime
        else:
            inv = pow(det, prime - 2, prime)
            result = (result * pow(inv, -theta, prime)) % prime
    return result


@dataclass(frozen=True)
class SemiinvarianceReport:
    """Outcome of randomized base-change law checks."""

    orientation: str
    dims: tuple[int, ...]
    thetas: tuple[int, ...]
    prime: int
    seed: int
    trials: int
    invariants: tuple[str, ...]
    det_a_tested: bool
    checks: int
    failures: int
    first_counterexample: dict | None

    def to_json(self) -> dict:
        return {
            "orientation": self.orientation,
            "dims": list(self.dims),
            "thetas": list(self.thetas),
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "invariants": list(self.invariants),
            "det_a_tested": self.det_a_tested,
            "checks": self.checks,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


def check_semiinvariance(
    quiver: QuiverAn,
    thetas: Weights,
    dims,
    trials: int,
    prime: int,
    seed: int,
) -> SemiinvarianceReport:
    """Verify chi_W(g) * f(g . Y) = f(Y) on random (g, Y) draws.

    Tested invariants: the hom-matrix determinant against every interval
    whose dimension vector pairs to zero with `dims` (weight: the
    interval's left system), plus the path-block determinant for
    `thetas` when those weights pair to zero with `dims` (otherwise that
    invariant is rejected before any trial runs).
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if not fm.is_prime(prime):
        raise DomainError(f"{prime} is not prime")
    if len(dims) != quiver.n or len(thetas) != quiver.n:
        raise DomainError("dims/thetas do not match the quiver")
    dims = tuple(int(d) for d in dims)
    thetas = tuple(int(t) for t in thetas)

    tested = []
    for rep in enumerate_indecomposables(quiver):
        if euler_form(quiver, dimension_vector(rep, quiver.n), dims) == 0:
            tested.append(
                (
                    f"c[{rep.p},{rep.q}]",
                    thin_rep(quiver, rep, prime),
                    weight_left(quiver, rep),
                )
            )
    det_a_tested = sum(t * d for t, d in zip(thetas, dims)) == 0

    rng = random.Random(seed)
    checks = 0
    failures = 0
    first = None
    for trial in range(trials):
        y = _random_rep(rng, quiver, dims, prime)
        g = tuple(
            tuple(tuple(row) for row in fm.random_invertible(rng, d, prime))
            for d in dims
        )
        gy = apply_group(g, y, quiver)

        def run(name, weight, value_y, value_gy):
            nonlocal checks, failures, first
            chi = character_value(weight, g, prime)
            checks += 1
            if (chi * value_gy) % prime != value_y % prime:
                failures += 1
                if first is None:
                    first = {
                        "trial": trial,
                        "invariant": name,
                        "expected": value_y % prime,
                        "actual": (chi * value_gy) % prime,
                    }

        for name, x, weight in tested:
            run(name, weight, c_semiinvariant(quiver, x, y), c_semiinvariant(quiver, x, gy))
        if det_a_tested:
            run(
                "det_A",
                thetas,
                det_a_semiinvariant(quiver, thetas, y),
                det_a_semiinvariant(quiver, thetas, gy),
            )

    return SemiinvarianceReport(
        orientation=quiver.word,
        dims=dims,
        thetas=thetas,
        prime=prime,
        seed=seed,
        trials=trials,
        invariants=tuple(name for name, _, _ in tested)
        + (("det_A",) if det_a_tested else ()),
        det_a_tested=det_a_tested,
        checks=checks,
        failures=failures,
        first_counterexample=first,
    )
