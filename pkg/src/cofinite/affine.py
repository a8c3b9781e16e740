"""Affine semigroups in N^d and the relative-gap machinery.

Given affine semigroups S ⊆ C, decide whether C \\ S is finite and, when it
is, list it.  Everything reduces to the monoid homomorphism

    f_C : N^n -> C,   x -> sum(x_i * g_i)

where g_1..g_n generate C: C \\ S is the f_C-image of N^n \\ f_C^{-1}(S), and
the preimage is a submonoid of N^n whose generators come from a Hilbert basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod

import numpy as np

from .diophantine import hilbert_basis, minimal_solutions
from .errors import DimensionMismatch, NotContained, PreconditionError
from .lattice import IntVector, rref, combine, from_columns, rank, vec
from .numerical import NumericalSemigroup


class AffineSemigroup:
    """Submonoid of N^d generated by a finite list of non-zero vectors.

    The generator list is kept as given (order matters for f_C and the
    coordinate systems built on it); ``minimal_generators`` gives the
    canonical form.
    """

    __slots__ = ("generators", "dim", "_members", "_nonmembers", "_mingens", "_solver")

    def __init__(self, generators):
        gens = tuple(vec(g) for g in generators)
        if not gens:
            raise PreconditionError("an affine semigroup needs at least one generator")
        dim = len(gens[0])
        if dim == 0:
            raise PreconditionError("dimension must be positive")
        for g in gens:
            if len(g) != dim:
                raise DimensionMismatch(f"generator {g} is not in dimension {dim}")
            if any(x < 0 for x in g):
                raise PreconditionError(f"generator {g} has a negative coordinate")
            if not any(g):
                raise PreconditionError("the zero vector cannot be a generator")
        self.generators = gens
        self.dim = dim
        self._members: set = {(0,) * dim}
        self._nonmembers: set = set()
        self._mingens = None
        self._solver = None

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"AffineSemigroup({[list(g) for g in self.generators]})"

    def __contains__(self, v) -> bool:
        return member(self, v)

    @property
    def minimal_generators(self) -> list[IntVector]:
        if self._mingens is None:
            self._mingens = minimal_generators(self.generators)
        return list(self._mingens)

    def image(self, x) -> IntVector:
        """f_S(x) = sum(x_i * g_i)."""
        if len(x) != len(self.generators):
            raise DimensionMismatch(f"expected {len(self.generators)} coefficients")
        return combine(x, self.generators, self.dim)


def _as_semigroup(s) -> AffineSemigroup:
    return s if isinstance(s, AffineSemigroup) else AffineSemigroup(s)


def _check_point(s: AffineSemigroup, v) -> IntVector:
    v = vec(v)
    if len(v) != s.dim:
        raise DimensionMismatch(f"{v} is not in dimension {s.dim}")
    return v


GRID_LIMIT = 1_000_000


class _GridSolver:
    """Exact membership through a basis B of the generators' span.

    Coefficients of the generators outside B are enumerated on a numpy grid;
    the rest of the residual is solved for B with an integer adjugate.
    """

    def __init__(self, gens: tuple):
        basis: list[IntVector] = []
        for g in sorted(gens, key=lambda g: (sum(g), g)):
            if rank(basis + [g]) > len(basis):
                basis.append(g)
        r, d = len(basis), len(gens[0])
        self.rows = next(rows for rows in itertools.combinations(range(d), r)
                         if rank([tuple(b[i] for i in rows) for b in basis]) == r)
        square = [tuple(b[i] for i in self.rows) for b in basis]
        inverse = [_solve_exact(square, tuple(int(i == k) for i in range(r))) for k in range(r)]
        self.det = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for col in inverse for c in col), 1)
        adj = [[int(inverse[k][j] * self.det) for k in range(r)] for j in range(r)]
        rest = [g for g in gens if g not in basis]
        # every product formed in __call__ stays below max(v) * scale
        top = max(max(g) for g in gens) + 1
        self.scale = (max(abs(x) for row in adj for x in row) + 1) * (r + 1) ** 2 * top * (len(gens) + 1)
        if self.scale >= 2 ** 62:
            return
        self.adj = np.array(adj, dtype=np.int64).reshape(r, r)
        self.basis = np.array(basis, dtype=np.int64).reshape(r, d)
        self.others = np.array(rest, dtype=np.int64).reshape(len(rest), d)

    def __call__(self, v: IntVector) -> bool | None:
        if (max(v) + 1) * self.scale >= 2 ** 62:
            return None  # int64 could overflow; the caller falls back to exact search
        bounds = [min(x // c for x, c in zip(v, o) if c > 0) for o in self.others.tolist()]
        if prod(b + 1 for b in bounds) > GRID_LIMIT:
            return None
        if bounds:
            lam = np.indices([b + 1 for b in bounds]).reshape(len(bounds), -1).T
            res = np.array(v, dtype=np.int64) - lam @ self.others
        else:
            res = np.array([v], dtype=np.int64)
        res = res[(res >= 0).all(axis=1)]
        scaled = res[:, list(self.rows)] @ self.adj.T
        ok = (scaled % self.det == 0).all(axis=1) & (scaled >= 0).all(axis=1)
        if not ok.any():
            return False
        mu = scaled[ok] // self.det
        return bool((mu @ self.basis == res[ok]).all(axis=1).any())


def member(s: AffineSemigroup, v) -> bool:
    """Exact membership test, memoised per semigroup.

    Uses the grid solver when the enumeration is small enough and falls back
    to a depth-first subtraction of generators otherwise.
    """
    s = _as_semigroup(s)
    v = _check_point(s, v)
    if any(x < 0 for x in v):
        return False
    if v in s._members:
        return True
    if v in s._nonmembers:
        return False
    if s._solver is None:
        s._solver = _GridSolver(s.generators)
    verdict = s._solver(v)
    if verdict is not None:
        (s._members if verdict else s._nonmembers).add(v)
        return verdict
    gens = sorted(s.generators, key=sum, reverse=True)
    visited = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for g in gens:
            r = tuple(a - b for a, b in zip(w, g))
            if any(a < 0 for a in r):
                continue
            if r in s._members:
                s._members.add(v)
                return True
            if r in visited or r in s._nonmembers:
                continue
            visited.add(r)
            stack.append(r)
    # exhaustive search failed: every residual seen is a non-member too
    s._nonmembers.update(visited)
    return False


def factorizations(s: AffineSemigroup, v) -> list[IntVector]:
    """All x in N^n with sum(x_i g_i) = v, sorted lexicographically."""
    s = _as_semigroup(s)
    v = _check_point(s, v)
    gens = s.generators
    n = len(gens)
    out: list[IntVector] = []
    if any(x < 0 for x in v):
        return out

    def bound(g, r):
        return min(a // b for a, b in zip(r, g) if b > 0)

    def rec(k, r, acc):
        if k == n - 1:
            g = gens[k]
            c = bound(g, r)
            if all(a == c * b for a, b in zip(r, g)):
                out.append(tuple(acc) + (c,))
            return
        g = gens[k]
        for c in range(bound(g, r) + 1):
            rr = tuple(a - c * b for a, b in zip(r, g))
            acc.append(c)
            rec(k + 1, rr, acc)
            acc.pop()

    rec(0, v, [])
    return sorted(out)


def minimal_generators(gens) -> list[IntVector]:
    """The unique minimal generating set of the monoid spanned by ``gens``."""
    gens = sorted({vec(g) for g in gens}, key=lambda g: (sum(g), g))
    if not gens:
        return []
    for g in gens:
        if not any(g):
            raise PreconditionError("the zero vector cannot be a generator")
        if any(x < 0 for x in g):
            raise PreconditionError(f"{g} has a negative coordinate")
    kept: list[IntVector] = []
    for g in gens:
        # only strictly smaller-sum elements can take part in a decomposition of g
        if not kept or not member(AffineSemigroup(kept), g):
            kept.append(g)
    return sorted(kept)


# -- cones -------------------------------------------------------------------

def _solve_exact(cols: list[IntVector], target: IntVector):
    """Unique rational solution of sum(c_j * cols[j]) = target, or None.

    Returns None when the columns are dependent or the system is inconsistent.
    """
    k = len(cols)
    rows = [[c[i] for c in cols] + [target[i]] for i in range(len(target))]
    red, pivots = rref(rows)
    if pivots != list(range(k)):
        return None
    return [red[i][k] for i in range(k)]


def in_cone(v: IntVector, gens: list[IntVector]) -> bool:
    """Exact test for v in the rational cone spanned by ``gens``.

    By Caratheodory it is enough to try linearly independent subsets.
    """
    if not any(v):
        return True
    d = len(v)
    for size in range(1, min(d, len(gens)) + 1):
        for sub in itertools.combinations(gens, size):
            sol = _solve_exact(list(sub), v)
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


def _parallel(a: IntVector, b: IntVector) -> bool:
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


def extreme_rays(s) -> list[IntVector]:
    """One minimal generator on each extreme ray of cone(S).

    Where several minimal generators share a ray the smallest (by coordinate
    sum) is taken.  Output is sorted lexicographically.
    """
    s = _as_semigroup(s)
    mg = sorted(s.minimal_generators, key=lambda g: (sum(g), g))
    rays: list[IntVector] = []
    for g in mg:
        if any(_parallel(g, r) for r in rays):
            continue
        others = [h for h in mg if not _parallel(g, h)]
        if not in_cone(g, others):
            rays.append(g)
    return sorted(rays)


# -- conditions (1) and (2) ----------------------------------------------------

def _require_contained(c: AffineSemigroup, s: AffineSemigroup) -> None:
    if c.dim != s.dim:
        raise DimensionMismatch(f"dimensions {c.dim} and {s.dim} differ")
    for g in s.generators:
        if not member(c, g):
            raise NotContained(f"generator {g} of S is not in C")


def _check_index(s: AffineSemigroup, i: int) -> None:
    if not 0 <= i < len(s.generators):
        raise PreconditionError(f"generator index {i} out of range")


def _monoid_gens_1d(values) -> list[int]:
    """Minimal generators of the submonoid of N spanned by ``values``."""
    vals = sorted({v for v in values if v > 0})
    if not vals:
        return []
    g = reduce(gcd, vals)
    return [g * x for x in NumericalSemigroup([v // g for v in vals]).generators]


def _axis_values(c: AffineSemigroup, s: AffineSemigroup, i: int) -> list[int]:
    a = from_columns(s.minimal_generators + [tuple(-x for x in c.generators[i])])
    return [x[-1] for x in hilbert_basis(a)]


def axis_semigroup(c, s, i: int) -> NumericalSemigroup | None:
    """S_i = {λ in N : λ g_i in S} when it is a numerical semigroup, else None.

    Indices are 0-based into C's generator list.
    """
    c, s = _as_semigroup(c), _as_semigroup(s)
    _check_index(c, i)
    _require_contained(c, s)
    gens = _monoid_gens_1d(_axis_values(c, s, i))
    if not gens or reduce(gcd, gens) != 1:
        return None
    return NumericalSemigroup(gens)


def mixing_coefficient(c, s, i: int, j: int) -> int | None:
    """min{k : g_i + k g_j in S}, or None when no such k exists."""
    c, s = _as_semigroup(c), _as_semigroup(s)
    if i == j:
        raise PreconditionError("mixing coefficient needs i != j")
    _check_index(c, i)
    _check_index(c, j)
    _require_contained(c, s)
    gi, gj = c.generators[i], c.generators[j]
    if member(s, gi):
        return 0
    a = from_columns(s.minimal_generators + [tuple(-x for x in gj)])
    sols = minimal_solutions(a, gi)
    if not sols.minimals:
        return None
    return min(x[-1] for x in sols)


@dataclass(frozen=True)
class CofinitenessReport:
    cofinite: bool
    axis_semigroups: tuple  # per generator of C: NumericalSemigroup or None
    mixing: dict = field(default_factory=dict)  # (i, j) -> int or None

    def failures(self) -> list:
        out = [("axis", i) for i, a in enumerate(self.axis_semigroups) if a is None]
        out += [("mixing", ij) for ij, k in sorted(self.mixing.items()) if k is None]
        return out


def is_C_cofinite(c, s) -> CofinitenessReport:
    """Decide finiteness of C \\ S from the two per-generator conditions."""
    c, s = _as_semigroup(c), _as_semigroup(s)
    _require_contained(c, s)
    n = len(c.generators)
    axes = tuple(axis_semigroup(c, s, i) for i in range(n))
    mixing = {(i, j): mixing_coefficient(c, s, i, j)
              for i in range(n) for j in range(n) if i != j}
    ok = all(a is not None for a in axes) and all(k is not None for k in mixing.values())
    return CofinitenessReport(ok, axes, mixing)


# -- generalized numerical semigroups in N^n -----------------------------------

def _support(v: IntVector) -> list[int]:
    return [k for k, x in enumerate(v) if x]


def _axis_data(b: list[IntVector], n: int):
    axis = [[] for _ in range(n)]
    mix = [[None] * n for _ in range(n)]
    for v in b:
        sup = _support(v)
        if len(sup) == 1:
            axis[sup[0]].append(v[sup[0]])
        for i in sup:
            if v[i] != 1:
                continue
            rest = [k for k in sup if k != i]
            if not rest:
                for j in range(n):
                    if j != i:
                        mix[i][j] = 0
            elif len(rest) == 1:
                j = rest[0]
                if mix[i][j] is None or v[j] < mix[i][j]:
                    mix[i][j] = v[j]
    return axis, mix


def is_Nn_cofinite(b) -> bool:
    """Whether the monoid spanned by ``b`` has finite complement in N^n."""
    b = [vec(v) for v in b if any(v)]
    if not b:
        return False
    n = len(b[0])
    axis, mix = _axis_data(b, n)
    for i in range(n):
        if not axis[i] or reduce(gcd, axis[i]) != 1:
            return False
    return all(mix[i][j] is not None for i in range(n) for j in range(n) if i != j)


def gap_box(b) -> tuple[int, ...]:
    """Exclusive upper bounds β with every gap of ⟨b⟩ inside [0,β_1) x ... x [0,β_n).

    A point with every coordinate at least the axis conductor is a sum of
    axis elements, so each gap sits in a slab x_j < c_j.  Inside the slab,
    x_j copies of e_j + m e_k (m the mixing coefficient) peel coordinate j off
    and leave a gap of the monoid restricted to the other coordinates, which
    is bounded recursively.
    """
    b = [vec(v) for v in b if any(v)]
    if not is_Nn_cofinite(b):
        raise PreconditionError("generators do not span a cofinite monoid of N^n")
    n = len(b[0])
    axis, mix = _axis_data(b, n)
    cond = [NumericalSemigroup(axis[i]).conductor for i in range(n)]
    memo: dict = {}

    def bound(coords: frozenset) -> dict:
        if coords in memo:
            return memo[coords]
        beta = {k: cond[k] for k in coords}
        if len(coords) > 1:
            for j in coords:
                if cond[j] == 0:
                    continue
                rest = coords - {j}
                sub = bound(rest)
                for k in rest:
                    beta[k] = max(beta[k], sub[k] + (cond[j] - 1) * mix[j][k])
        memo[coords] = beta
        return beta

    beta = bound(frozenset(range(n)))
    return tuple(beta[k] for k in range(n))


def gaps_Nn(b) -> list[IntVector]:
    """N^n \\ ⟨b⟩, sorted lexicographically."""
    b = sorted({vec(v) for v in b if any(v)})
    beta = gap_box(b)
    members: set = set()
    gaps: list[IntVector] = []
    # lexicographic sweep: x - g precedes x for every g <= x
    for x in itertools.product(*(range(k) for k in beta)):
        if not any(x) or any(
            all(gi <= xi for gi, xi in zip(g, x))
            and tuple(xi - gi for gi, xi in zip(g, x)) in members
            for g in b
        ):
            members.add(x)
        else:
            gaps.append(x)
    for h in gaps:
        assert all(hk < bk for hk, bk in zip(h, beta)), (h, beta)
    return gaps


# -- the relative-gap algorithm ------------------------------------------------

def preimage_monoid_generators(c, s) -> list[IntVector]:
    """Minimal generators of f_C^{-1}(S) ⊆ N^n."""
    c, s = _as_semigroup(c), _as_semigroup(s)
    _require_contained(c, s)
    n = len(c.generators)
    a = from_columns(list(c.generators) + [tuple(-x for x in g) for g in s.minimal_generators])
    proj = {x[:n] for x in hilbert_basis(a)}
    proj.discard((0,) * n)
    return minimal_generators(proj)


@dataclass(frozen=True)
class RelativeGaps:
    preimage_generators: tuple
    cofinite: bool
    preimage_gaps: tuple = ()
    gaps: tuple = ()


def relative_gaps_detail(c, s) -> RelativeGaps:
    c, s = _as_semigroup(c), _as_semigroup(s)
    b = preimage_monoid_generators(c, s)
    if not is_Nn_cofinite(b):
        return RelativeGaps(tuple(b), False)
    h = gaps_Nn(b)
    image = sorted({c.image(x) for x in h})
    return RelativeGaps(tuple(b), True, tuple(h), tuple(image))


def relative_gaps(c, s) -> list[IntVector] | None:
    """C \\ S sorted lexicographically, or None when it is infinite."""
    r = relative_gaps_detail(c, s)
    return list(r.gaps) if r.cofinite else None


def remove_gap_generators(c, h) -> list[IntVector]:
    """Generators of C \\ {h} for a minimal generator h of C.

    Uses ⟨g_j, g_j + h (g_j != h), 2h, 3h⟩.
    """
    c = _as_semigroup(c)
    h = _check_point(c, h)
    if h not in c.minimal_generators:
        raise PreconditionError(f"{h} is not a minimal generator of C")
    others = [g for g in c.generators if g != h]
    return others + [tuple(a + b for a, b in zip(g, h)) for g in others] + [
        tuple(2 * x for x in h), tuple(3 * x for x in h)]


def axis_generators_are_minimal_check(c, s, i: int) -> bool:
    """For an extreme ray g_i of C with coordinate gcd 1: every λ g_i with λ
    a minimal generator of S_i is a minimal generator of S."""
    c, s = _as_semigroup(c), _as_semigroup(s)
    _check_index(c, i)
    g = c.generators[i]
    if reduce(gcd, g) != 1:
        raise PreconditionError(f"coordinates of {g} are not coprime")
    others = [h for h in c.generators if not _parallel(h, g)]
    if in_cone(g, others):
        raise PreconditionError(f"{g} is not on an extreme ray of C")
    _require_contained(c, s)
    lams = _monoid_gens_1d(_axis_values(c, s, i))
    mg = set(s.minimal_generators)
    return all(tuple(lam * x for x in g) in mg for lam in lams)
