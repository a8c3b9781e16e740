"""Integer vectors, the componentwise order on N^n and term orders.

Vectors are plain tuples of Python ints, matrices are tuples of row tuples.
Python ints are unbounded, so nothing here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, PreconditionError

IntVector = tuple  # tuple[int, ...]
IntMatrix = tuple  # tuple[IntVector, ...], row-major


def vec(coords: Iterable) -> IntVector:
    return tuple(int(c) for c in coords)


def zero(n: int) -> IntVector:
    return (0,) * n


def unit(n: int, i: int) -> IntVector:
    return tuple(1 if k == i else 0 for k in range(n))


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension {len(a)} != {len(b)}")


def add(a: IntVector, b: IntVector) -> IntVector:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: IntVector, b: IntVector) -> IntVector:
    _check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: IntVector) -> IntVector:
    return tuple(k * x for x in a)


def is_nonneg(a: IntVector) -> bool:
    return all(x >= 0 for x in a)


def combine(coeffs: Sequence[int], vectors: Sequence[IntVector], dim: int) -> IntVector:
    """Return sum(coeffs[i] * vectors[i]) as a vector of length ``dim``."""
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                out[k] += c * x
    return tuple(out)


def matrix(rows: Iterable[Iterable]) -> IntMatrix:
    m = tuple(vec(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionMismatch("ragged matrix rows")
    return m


def from_columns(columns: Sequence[IntVector]) -> IntMatrix:
    if not columns:
        raise PreconditionError("a matrix needs at least one column")
    d = len(columns[0])
    for c in columns:
        if len(c) != d:
            raise DimensionMismatch("columns of different length")
    return tuple(tuple(c[k] for c in columns) for k in range(d))


def columns(a: IntMatrix) -> list[IntVector]:
    if not a:
        return []
    return [tuple(row[j] for row in a) for j in range(len(a[0]))]


def matvec(a: IntMatrix, x: IntVector) -> IntVector:
    return tuple(sum(r * v for r, v in zip(row, x) if v) for row in a)


def rref(rows: list[list]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        r0 = len(pivots)
        p = next((r for r in range(r0, len(rows)) if rows[r][col] != 0), None)
        if p is None:
            continue
        rows[r0], rows[p] = rows[p], rows[r0]
        pv = rows[r0][col]
        rows[r0] = [x / pv for x in rows[r0]]
        for r in range(len(rows)):
            if r != r0 and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[r0])]
        pivots.append(col)
    return rows, pivots


def rank(vectors: Sequence[IntVector]) -> int:
    """Rank over Q of a list of vectors."""
    if not vectors:
        return 0
    return len(rref([list(v) for v in vectors])[1])


def primitive(v: Sequence) -> IntVector:
    """The integer vector on the ray of a rational vector, with coprime entries."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def nullspace(cols: Sequence[IntVector]) -> list[IntVector]:
    """Integer basis of {c : sum(c_j * cols[j]) = 0}, one primitive vector per free column."""
    n = len(cols)
    if not n:
        return []
    rows = [[col[i] for col in cols] for i in range(len(cols[0]))]
    red, pivots = rref(rows)
    out = []
    for free in (j for j in range(n) if j not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        out.append(primitive(v))
    return out


def natural_leq(a: IntVector, b: IntVector) -> bool:
    """Componentwise a <= b."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def minimals(vectors: Iterable[IntVector]) -> list[IntVector]:
    """Minimal elements under the componentwise order, sorted lexicographically."""
    cands = sorted(set(vectors), key=lambda v: (sum(v), v))
    if cands:
        n = len(cands[0])
        for v in cands:
            if len(v) != n:
                raise DimensionMismatch("vectors of different dimension")
    kept: list[IntVector] = []
    for v in cands:
        # anything that could lie below v has a smaller or equal sum, so it is already in kept
        if not any(all(x <= y for x, y in zip(m, v)) for m in kept):
            kept.append(v)
    return sorted(kept)


def dominates_any(v: IntVector, vectors: Iterable[IntVector]) -> bool:
    return any(all(x <= y for x, y in zip(m, v)) for m in vectors)


LEX = "lex"
GRLEX = "grlex"
GREVLEX = "grevlex"
ORDER_KINDS = (LEX, GRLEX, GREVLEX)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on N^n.

    ``perm`` lists the variable indices from most to least significant; when
    omitted the natural order x_0 > x_1 > ... is used.
    """

    kind: str = GREVLEX
    perm: tuple | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise PreconditionError(f"unknown term order {self.kind!r}")
        if self.perm is not None:
            p = tuple(int(i) for i in self.perm)
            if sorted(p) != list(range(len(p))):
                raise PreconditionError(f"not a permutation: {p}")
            object.__setattr__(self, "perm", p)

    def key(self, v: IntVector) -> tuple:
        """A sort key such that u < v in the order iff key(u) < key(v)."""
        if self.perm is not None:
            if len(self.perm) != len(v):
                raise DimensionMismatch("term order permutation has wrong length")
            v = tuple(v[i] for i in self.perm)
        if self.kind == LEX:
            return tuple(v)
        if self.kind == GRLEX:
            return (sum(v), tuple(v))
        return (sum(v), tuple(-x for x in reversed(v)))

    def compare(self, a: IntVector, b: IntVector) -> int:
        _check_dims(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class BlockOrder:
    """Elimination order: the first ``split`` variables form a block that
    dominates; ties are broken by ``second`` on the remaining variables."""

    split: int
    first: TermOrder = TermOrder(GREVLEX)
    second: TermOrder = TermOrder(GREVLEX)

    def key(self, v: IntVector) -> tuple:
        return (self.first.key(v[: self.split]), self.second.key(v[self.split:]))

    def compare(self, a: IntVector, b: IntVector) -> int:
        _check_dims(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def term_compare(order, a: IntVector, b: IntVector) -> str:
    """Return ``"less"``, ``"equal"`` or ``"greater"``."""
    return ("less", "equal", "greater")[order.compare(a, b) + 1]
