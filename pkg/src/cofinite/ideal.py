"""Ideals I = X + S of an affine semigroup and their complements S \\ I.

Two independent routes compute S \\ I:

* ``complement_by_box`` finds k_i = min{k : k g_i in I} for every generator
  and scans the box of coefficient vectors with λ_i < k_i;
* ``complement_by_preimage`` computes the minimal elements M(I) of the
  ideal f_S^{-1}(I) of N^n and maps the staircase under M(I) through f_S.

A third, Gröbner-basis route lives in :mod:`cofinite.groebner`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .affine import _as_semigroup, extreme_rays, member
from .diophantine import minimal_solutions
from .errors import AlgorithmDisagreement, DimensionMismatch, NotContained, PreconditionError
from .lattice import IntVector, from_columns, minimals, vec


class SemigroupIdeal:
    """The ideal X + S, stored with X reduced to its ≤_S-minimal elements."""

    __slots__ = ("ambient", "base")

    def __init__(self, ambient, base):
        s = _as_semigroup(ambient)
        pts = sorted({vec(u) for u in base})
        if not pts:
            raise PreconditionError("an ideal needs at least one base point")
        for u in pts:
            if len(u) != s.dim:
                raise DimensionMismatch(f"base point {u} is not in dimension {s.dim}")
            if not member(s, u):
                raise NotContained(f"base point {u} is not in the semigroup")
        kept = [u for u in pts
                if not any(w != u and member(s, tuple(a - b for a, b in zip(u, w))) for w in pts)]
        self.ambient = s
        self.base = tuple(kept)

    def __contains__(self, v) -> bool:
        return in_ideal(self, v)

    def __repr__(self):
        return f"SemigroupIdeal({self.ambient!r}, {[list(u) for u in self.base]})"


def in_ideal(ideal: SemigroupIdeal, v) -> bool:
    v = vec(v)
    s = ideal.ambient
    for u in ideal.base:
        r = tuple(a - b for a, b in zip(v, u))
        if all(x >= 0 for x in r) and member(s, r):
            return True
    return False


@dataclass(frozen=True)
class IdealComplementResult:
    finite: bool
    complement: tuple = ()
    witnesses: tuple = ()  # per generator: k_i or None


def min_multiple_in_ideal(ideal: SemigroupIdeal, i: int) -> int | None:
    """min{k in N : k g_i in I}, or None if no multiple of g_i lies in I.

    k g_i = u + sum(λ_l g_l) is rewritten as
    -u = sum_{l != i} λ_l g_l + k (-g_i) + λ_i g_i and solved for minimal
    non-negative solutions; the smallest last coordinate is the answer.
    """
    s = ideal.ambient
    gens = s.generators
    if not 0 <= i < len(gens):
        raise PreconditionError(f"generator index {i} out of range")
    cols = [g for l, g in enumerate(gens) if l != i] + [tuple(-x for x in gens[i])]
    a = from_columns(cols)
    best = None
    for u in ideal.base:
        sols = minimal_solutions(a, tuple(-x for x in u))
        for x in sols:
            if best is None or x[-1] < best:
                best = x[-1]
    return best


def is_ideal_cofinite(ideal: SemigroupIdeal) -> IdealComplementResult:
    ks = tuple(min_multiple_in_ideal(ideal, i) for i in range(len(ideal.ambient.generators)))
    return IdealComplementResult(all(k is not None for k in ks), (), ks)


def complement_by_box(ideal: SemigroupIdeal, ks=None) -> IdealComplementResult:
    """S \\ I = {sum λ_i g_i not in I : 0 <= λ_i < k_i}.

    ``ks`` may supply any multiples with k_i g_i in I, not necessarily the
    minimal ones; the answer does not change, only the work.
    """
    s = ideal.ambient
    if ks is None:
        ks = is_ideal_cofinite(ideal).witnesses
    ks = tuple(ks)
    if any(k is None for k in ks):
        return IdealComplementResult(False, (), ks)
    out = set()
    for lam in itertools.product(*(range(k) for k in ks)):
        v = s.image(lam)
        if v not in out and not in_ideal(ideal, v):
            out.add(v)
    return IdealComplementResult(True, tuple(sorted(out)), ks)


def preimage_ideal_minimals(ideal: SemigroupIdeal) -> list[IntVector]:
    """M(I): minimal elements of f_S^{-1}(I) ⊆ N^n, sorted."""
    s = ideal.ambient
    n = len(s.generators)
    a = from_columns(list(s.generators) + [tuple(-x for x in g) for g in s.generators])
    proj = set()
    for u in ideal.base:
        for x in minimal_solutions(a, u):
            proj.add(x[:n])
    return minimals(proj)


def complement_by_preimage(ideal: SemigroupIdeal) -> IdealComplementResult:
    """S \\ I as the f_S-image of {x in N^n : no y in M(I) with y <= x}."""
    s = ideal.ambient
    n = len(s.generators)
    m = preimage_ideal_minimals(ideal)
    ks: list[int | None] = []
    for i in range(n):
        on_axis = [y[i] for y in m if all(y[k] == 0 for k in range(n) if k != i)]
        ks.append(min(on_axis) if on_axis else None)
    check = is_ideal_cofinite(ideal).witnesses
    if tuple(ks) != check:
        raise AlgorithmDisagreement(f"axis elements of M(I) give {ks}, direct search gives {check}")
    if any(k is None for k in ks):
        return IdealComplementResult(False, (), tuple(ks))
    # k_i e_i lies in M(I), so no point of the staircase reaches x_i = k_i
    q = [x for x in itertools.product(*(range(k) for k in ks))
         if not any(all(a <= b for a, b in zip(y, x)) for y in m)]
    out = {s.image(x) for x in q}
    return IdealComplementResult(True, tuple(sorted(out)), tuple(ks))


METHODS = ("box", "preimage", "groebner")


def ideal_complement(ideal: SemigroupIdeal, method: str = "box", order=None) -> IdealComplementResult:
    if method == "box":
        return complement_by_box(ideal)
    if method == "preimage":
        return complement_by_preimage(ideal)
    if method == "groebner":
        from .groebner import ideal_complement_groebner
        return ideal_complement_groebner(ideal, order)
    raise PreconditionError(f"unknown method {method!r}")


def apery(s, x, method: str = "box", order=None) -> list[IntVector] | None:
    """Ap(S, X) = S \\ (X + S), or None when it is infinite."""
    s = _as_semigroup(s)
    pts = [vec(v) for v in x]
    if not pts:
        raise PreconditionError("Apéry set needs a non-empty X")
    res = ideal_complement(SemigroupIdeal(s, pts), method, order)
    return list(res.complement) if res.finite else None


def apery_extreme_rays(s, method: str = "box") -> list[IntVector]:
    """Ap(S, E) for E the extreme rays of S; always finite."""
    s = _as_semigroup(s)
    out = apery(s, extreme_rays(s), method)
    if out is None:
        raise AlgorithmDisagreement("Apéry set with respect to extreme rays reported infinite")
    return out
