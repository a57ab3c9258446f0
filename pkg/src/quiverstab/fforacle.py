"""Brute-force ground truth over small prime fields.

Representations are stored as explicit matrices, subspaces are
enumerated exhaustively in reduced row echelon form, and stability is
re-derived from scratch.  Resource guards keep the enumeration at desk
scale (vertex dimension <= 4, field size <= 3) and fail loudly; the
oracle exists to validate the combinatorial fast paths, not to compute
at production size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from . import fieldmath as fm
from .errors import DomainError, ResourceLimitError
from .quiver import IntervalRep, QuiverAn, dimension_vector

MAX_ENUM_DIM = 4
MAX_ENUM_PRIME = 3

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FFRep:
    """A representation over F_p: one d_t x d_s matrix per arrow."""

    prime: int
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if not fm.is_prime(self.prime):
            raise DomainError(f"{self.prime} is not prime")

    def validate(self, quiver: QuiverAn) -> None:
        if len(self.dims) != quiver.n or len(self.maps) != quiver.n - 1:
            raise DomainError("dimension/map counts do not match the quiver")
        for e, (s, t) in enumerate(quiver.arrows()):
            mat = self.maps[e]
            if len(mat) != self.dims[t - 1]:
                raise DomainError(
                    f"map {e} has {len(mat)} rows, expected {self.dims[t - 1]}"
                )
            if any(len(row) != self.dims[s - 1] for row in mat):
                raise DomainError(f"map {e} has a row of wrong width")


def _freeze(m) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def thin_rep(quiver: QuiverAn, rep: IntervalRep, prime: int) -> FFRep:
    """The interval representation: 1x1 identities inside [p, q]."""
    dims = dimension_vector(rep, quiver.n)
    maps = []
    for s, t in quiver.arrows():
        if rep.p <= s <= rep.q and rep.p <= t <= rep.q:
            maps.append(((1,),))
        else:
            maps.append(tuple(() for _ in range(dims[t - 1])))
    return FFRep(prime=prime, dims=dims, maps=tuple(maps))


def _random_rep(rng, quiver: QuiverAn, dims, prime: int) -> FFRep:
    maps = []
    for s, t in quiver.arrows():
        maps.append(_freeze(fm.random_matrix(rng, dims[t - 1], dims[s - 1], prime)))
    return FFRep(prime=prime, dims=tuple(dims), maps=tuple(maps))


def random_rep(quiver: QuiverAn, dims, prime: int, seed: int) -> FFRep:
    """Uniform random representation, deterministic in the seed."""
    if len(dims) != quiver.n:
        raise DomainError(f"expected {quiver.n} dimensions, got {len(dims)}")
    return _random_rep(random.Random(seed), quiver, dims, prime)


def enumerate_subspaces(dim: int, prime: int) -> tuple[Matrix, ...]:
    """Every subspace of F_p^dim as a canonical echelon basis.

    Guarded to dim <= 4 and prime <= 3.  The zero space is the empty
    basis.  Order: by rank, then pivot columns, then free entries.
    """
    if dim > MAX_ENUM_DIM or prime > MAX_ENUM_PRIME:
        raise ResourceLimitError(
            f"subspace enumeration guarded to dim <= {MAX_ENUM_DIM},"
            f" prime <= {MAX_ENUM_PRIME} (got dim={dim}, prime={prime})"
        )
    if not fm.is_prime(prime):
        raise DomainError(f"{prime} is not prime")
    out: list[Matrix] = [()]
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, dim)
                if c not in pivots
            ]
            for assignment in product(range(prime), repeat=len(free)):
                rows = [[0] * dim for _ in range(k)]
                for r, col in enumerate(pivots):
                    rows[r][col] = 1
                for (r, c), value in zip(free, assignment):
                    rows[r][c] = value
                out.append(_freeze(rows))
    return tuple(out)


def subrep_dimension_vectors(x: FFRep, quiver: QuiverAn) -> frozenset[tuple[int, ...]]:
    """Dimension vectors of all subrepresentations, by exhaustive search.

    Enumerates one subspace per vertex, pruning as soon as an arrow fails
    to map the chosen source subspace into the chosen target one.
    """
    x.validate(quiver)
    if max(x.dims, default=0) > MAX_ENUM_DIM or x.prime > MAX_ENUM_PRIME:
        raise ResourceLimitError(
            f"subrepresentation enumeration guarded to dim <= {MAX_ENUM_DIM},"
            f" prime <= {MAX_ENUM_PRIME}"
        )
    n = quiver.n
    p = x.prime
    arrows = quiver.arrows()
    # each choice is (basis rows, pivot columns); bases are already canonical
    choices = []
    for d in x.dims:
        per_vertex = []
        for basis in enumerate_subspaces(d, p):
            reduced, pivots = fm.rref(basis, p, d)
            per_vertex.append((tuple(reduced), tuple(pivots)))
        choices.append(per_vertex)

    def edge_ok(i: int, assignment) -> bool:
        """Arrow between vertices i and i+1 (1-based i), both assigned."""
        e = i - 1
        s, t = arrows[e]
        src_basis = choices[s - 1][assignment[s - 1]][0]
        dst_basis, dst_pivots = choices[t - 1][assignment[t - 1]]
        mat = x.maps[e]
        for vec in src_basis:
            image = fm.mat_vec(mat, vec, p, x.dims[t - 1], x.dims[s - 1])
            if not fm.in_rowspan(image, dst_basis, dst_pivots, p):
                return False
        return True

    found: set[tuple[int, ...]] = set()
    assignment: list[int] = []

    def rec(i: int) -> None:
        if i == n:
            found.add(tuple(len(choices[v][assignment[v]][0]) for v in range(n)))
            return
        for idx in range(len(choices[i])):
            assignment.append(idx)
            if i == 0 or edge_ok(i, assignment):
                rec(i + 1)
            assignment.pop()

    rec(0)
    return frozenset(found)


def is_stable_ff(x: FFRep, quiver: QuiverAn, thetas) -> bool:
    """Slope stability decided from the exhaustive subspace enumeration."""
    r_total = sum(x.dims)
    if r_total <= 0:
        raise DomainError("stability undefined for the zero representation")
    if len(thetas) != quiver.n:
        raise DomainError(f"expected {quiver.n} weights, got {len(thetas)}")
    w_total = sum(t * d for t, d in zip(thetas, x.dims))
    for dvec in subrep_dimension_vectors(x, quiver):
        r_s = sum(dvec)
        if r_s == 0 or r_s == r_total:
            continue
        w_s = sum(t * d for t, d in zip(thetas, dvec))
        if w_s * r_total >= w_total * r_s:
            return False
    return True


def apply_group(g, x: FFRep, quiver: QuiverAn) -> FFRep:
    """Base change: the map at each arrow becomes g_t . M . g_s^{-1}."""
    x.validate(quiver)
    p = x.prime
    n = quiver.n
    if len(g) != n:
        raise DomainError(f"expected {n} group blocks, got {len(g)}")
    inverses = []
    for i, block in enumerate(g):
        d = x.dims[i]
        if len(block) != d or any(len(row) != d for row in block):
            raise DomainError(f"group block {i + 1} has wrong shape")
        inv = fm.mat_inv(block, p, d)
        if inv is None:
            raise DomainError(f"group block {i + 1} is singular")
        inverses.append(inv)
    new_maps = []
    for e, (s, t) in enumerate(quiver.arrows()):
        ds, dt = x.dims[s - 1], x.dims[t - 1]
        half = fm.mat_mul(x.maps[e], inverses[s - 1], p, dt, ds, ds)
        new_maps.append(_freeze(fm.mat_mul(g[t - 1], half, p, dt, dt, ds)))
    return FFRep(prime=p, dims=x.dims, maps=tuple(new_maps))
