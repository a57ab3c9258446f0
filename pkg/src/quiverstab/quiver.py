"""Orientations of the A_n line quiver and their basic combinatorics.

Vertices are labeled 1..n left to right.  An orientation is encoded as a
word of length n-1 over {R, L}: letter e (0-based) describes the edge
between vertices e+1 and e+2, with R meaning the arrow e+1 -> e+2 and L
meaning e+1 <- e+2.  The word is the universal exchange format used by
every module and by the CLI.

Vertices fall into four classes by the directions of their incident
arrows: sources ("I"), sinks ("II"), through-vertices traversed left to
right ("III"), and through-vertices traversed right to left ("IV").  A
single isolated vertex (n = 1) has no incident arrows and is assigned
class "I" by convention; every weight formula gives it 0 either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainError, OrientationParseError

RIGHT = "R"
LEFT = "L"

_ALIASES = {"R": RIGHT, ">": RIGHT, "L": LEFT, "<": LEFT}

TYPE_I = "I"
TYPE_II = "II"
TYPE_III = "III"
TYPE_IV = "IV"

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class QuiverAn:
    """An orientation of the A_n line quiver, stored as its R/L word."""

    word: str

    def __post_init__(self):
        for pos, ch in enumerate(self.word, start=1):
            if ch not in (RIGHT, LEFT):
                raise OrientationParseError(
                    f"invalid orientation symbol {ch!r} at position {pos}"
                    " (expected R/L or >/<)",
                    position=pos,
                )

    @property
    def n(self) -> int:
        return len(self.word) + 1

    @property
    def right_mask(self) -> int:
        """Bitmask with bit e set iff edge e points right."""
        mask = 0
        for e, ch in enumerate(self.word):
            if ch == RIGHT:
                mask |= 1 << e
        return mask

    def right(self, edge: int) -> bool:
        """True iff 0-based edge points right (arrow edge+1 -> edge+2)."""
        return self.word[edge] == RIGHT

    def arrows(self) -> tuple[tuple[int, int], ...]:
        """(source, target) pairs, one per edge, in edge order."""
        out = []
        for e, ch in enumerate(self.word):
            if ch == RIGHT:
                out.append((e + 1, e + 2))
            else:
                out.append((e + 2, e + 1))
        return tuple(out)

    def opposite(self) -> "QuiverAn":
        """Same underlying graph with every arrow reversed."""
        flip = {RIGHT: LEFT, LEFT: RIGHT}
        return QuiverAn("".join(flip[ch] for ch in self.word))

    def reversed(self) -> "QuiverAn":
        """Left-right mirror image (relabel i -> n+1-i)."""
        flip = {RIGHT: LEFT, LEFT: RIGHT}
        return QuiverAn("".join(flip[ch] for ch in reversed(self.word)))


def parse_quiver(word: str) -> QuiverAn:
    """Parse an orientation word, accepting >/< as aliases for R/L.

    The empty word is the single-vertex quiver.
    """
    canonical = []
    for pos, ch in enumerate(word, start=1):
        if ch not in _ALIASES:
            raise OrientationParseError(
                f"invalid orientation symbol {ch!r} at position {pos}"
                " (expected R/L or >/<)",
                position=pos,
            )
        canonical.append(_ALIASES[ch])
    return QuiverAn("".join(canonical))


def all_orientations(n: int) -> tuple[QuiverAn, ...]:
    """All 2^(n-1) orientations of A_n, in lexicographic word order."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return tuple(
        QuiverAn("".join(bits)) for bits in product((LEFT, RIGHT), repeat=n - 1)
    )


@dataclass(frozen=True)
class VertexContext:
    """A vertex together with its class and left/right vertex counts."""

    index: int
    vtype: str
    l: int
    r: int


def classify_vertices(quiver: QuiverAn) -> tuple[VertexContext, ...]:
    """Classify every vertex of the orientation into classes I-IV."""
    n = quiver.n
    out = []
    for i in range(1, n + 1):
        in_from_left = i > 1 and quiver.right(i - 2)
        out_to_left = i > 1 and not quiver.right(i - 2)
        out_to_right = i < n and quiver.right(i - 1)
        in_from_right = i < n and not quiver.right(i - 1)
        incoming = int(in_from_left) + int(in_from_right)
        outgoing = int(out_to_left) + int(out_to_right)
        if incoming == 0:
            vtype = TYPE_I  # includes the isolated n = 1 vertex
        elif outgoing == 0:
            vtype = TYPE_II
        elif in_from_left and out_to_right:
            vtype = TYPE_III
        else:
            vtype = TYPE_IV
        out.append(VertexContext(index=i, vtype=vtype, l=i - 1, r=n - i))
    return tuple(out)


@dataclass(frozen=True, order=True)
class IntervalRep:
    """The thin indecomposable supported on the vertex interval [p, q]."""

    p: int
    q: int

    def __post_init__(self):
        if not 1 <= self.p <= self.q:
            raise DomainError(f"invalid interval [{self.p}, {self.q}]")

    @property
    def length(self) -> int:
        return self.q - self.p + 1


def dimension_vector(rep: IntervalRep, n: int) -> DimVector:
    """Indicator dimension vector of an interval inside A_n."""
    if rep.q > n:
        raise DomainError(f"interval [{rep.p}, {rep.q}] does not fit in A_{n}")
    return tuple(1 if rep.p <= i <= rep.q else 0 for i in range(1, n + 1))


def enumerate_indecomposables(quiver: QuiverAn) -> tuple[IntervalRep, ...]:
    """All n(n+1)/2 intervals [p, q], in lexicographic order."""
    n = quiver.n
    return tuple(
        IntervalRep(p, q) for p in range(1, n + 1) for q in range(p, n + 1)
    )


def is_indecomposable_thin(quiver, support) -> bool:
    """True iff the thin representation on `support` is indecomposable.

    For A_n that means the support is a non-empty contiguous run of
    vertex labels (a connected support quiver).
    """
    vs = sorted(set(support))
    if not vs:
        return False
    if vs[0] < 1 or vs[-1] > quiver.n:
        raise DomainError(f"support {vs} not within 1..{quiver.n}")
    return vs[-1] - vs[0] + 1 == len(vs)


def quadratic_form(quiver: QuiverAn, d) -> int:
    """Tits form: sum d_i^2 minus one d_s * d_t term per arrow."""
    total = sum(x * x for x in d)
    for s, t in quiver.arrows():
        total -= d[s - 1] * d[t - 1]
    return total


def positive_roots_bruteforce(quiver: QuiverAn, bound: int = 1) -> frozenset[DimVector]:
    """All non-zero vectors with entries in 0..bound where the Tits form is 1.

    With bound 1 this enumerates the dimension vectors of the
    indecomposables; the test suite checks larger bounds add nothing.
    """
    n = quiver.n
    roots = set()
    for d in product(range(bound + 1), repeat=n):
        if any(d) and quadratic_form(quiver, d) == 1:
            roots.add(d)
    return frozenset(roots)


def to_dot(quiver: QuiverAn, highlight=None) -> str:
    """Graphviz text for the orientation, shading an optional vertex subset.

    Output is deterministic byte for byte.
    """
    marked = set(highlight) if highlight else set()
    lines = ["digraph an_quiver {", "  rankdir=LR;", "  node [shape=circle];"]
    for i in range(1, quiver.n + 1):
        if i in marked:
            lines.append(f"  {i} [style=filled fillcolor=lightgray];")
        else:
            lines.append(f"  {i};")
    for s, t in quiver.arrows():
        lines.append(f"  {s} -> {t};")
    lines.append("}")
    return "\n".join(lines) + "\n"
