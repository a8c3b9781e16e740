"""Buchberger's algorithm for pure-difference binomials and monomials.

Every S-polynomial and every reduction step of x^a - x^b and x^c inputs is
again of that shape, so polynomials are stored as one or two exponent
vectors and no coefficient field is ever needed: a reduction either rewrites
a term, drops it (monomial divisor) or cancels the binomial to zero.

This powers the commutative-algebra route to S \\ I: with ψ(Z_i) = Y^{g_i}
and J_S = ker ψ, the standard monomials of P_S = J_S + (Z^{a_1},...,Z^{a_r})
map bijectively onto S \\ I whenever P_S is zero-dimensional.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .affine import _as_semigroup, extreme_rays, factorizations
from .errors import AlgorithmDisagreement, PreconditionError
from .ideal import IdealComplementResult, SemigroupIdeal
from .lattice import BlockOrder, IntVector, TermOrder, GREVLEX


@dataclass(frozen=True)
class BinomialElement:
    """lead - tail, or the monomial lead when tail is None."""

    lead: IntVector
    tail: IntVector | None = None

    @property
    def kind(self) -> str:
        return "monomial" if self.tail is None else "binomial"

    def __str__(self):
        return _fmt(self.lead) if self.tail is None else f"{_fmt(self.lead)} - {_fmt(self.tail)}"


def _fmt(t: IntVector, names=None) -> str:
    names = names or [f"Z{i + 1}" for i in range(len(t))]
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, t) if e]
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: object
    nvars: int

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leads(self) -> list[IntVector]:
        return [g.lead for g in self.elements]


def _divides(a: IntVector, b: IntVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _orient(terms: list, key) -> BinomialElement | None:
    if not terms:
        return None
    assert len(terms) <= 2, terms  # binomial closure
    if len(terms) == 2:
        if terms[0] == terms[1]:
            return None
        hi, lo = sorted(terms, key=key, reverse=True)
        return BinomialElement(hi, lo)
    return BinomialElement(terms[0])


def _reduce(terms: list, basis: list[BinomialElement], key, full: bool = True) -> list:
    """Normal form of a one- or two-term polynomial modulo ``basis``."""
    terms = list(terms)
    while True:
        if len(terms) == 2 and terms[0] == terms[1]:
            return []
        terms.sort(key=key, reverse=True)
        todo = terms if full else terms[:1]
        for idx, t in enumerate(todo):
            g = next((g for g in basis if _divides(g.lead, t)), None)
            if g is None:
                continue
            if g.tail is None:
                if len(terms) == 1:
                    return []
                del terms[idx]
            else:
                # apply the same rewrite as often as it stays applicable
                k = min((t_i - a) // (a - b) + 1
                        for t_i, a, b in zip(t, g.lead, g.tail) if a > b)
                terms[idx] = tuple(x - k * (a - b) for x, a, b in zip(t, g.lead, g.tail))
            break
        else:
            return terms


def _spoly(f: BinomialElement, g: BinomialElement) -> list:
    lcm = tuple(max(a, b) for a, b in zip(f.lead, g.lead))
    out = []
    for h in (f, g):
        if h.tail is not None:
            out.append(tuple(l - a + b for l, a, b in zip(lcm, h.lead, h.tail)))
    return out


def _as_terms(e) -> list:
    if isinstance(e, BinomialElement):
        return [e.lead] if e.tail is None else [e.lead, e.tail]
    return [tuple(int(x) for x in t) for t in e]


def _lcm(a: IntVector, b: IntVector) -> IntVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: IntVector, b: IntVector) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(gens, order) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal spanned by ``gens``.

    ``gens`` holds BinomialElement values or sequences of one or two exponent
    vectors (a monomial, or the difference of two monomials).
    """
    key = order.key
    raw = [_as_terms(g) for g in gens]
    m = len(raw[0][0]) if raw else 0
    basis: list[BinomialElement] = []
    active: list[int] = []
    pairs: list = []  # heap of (key(lcm), tiebreak, i, j, lcm)
    counter = 0

    def add(el: BinomialElement):
        # Gebauer-Möller update of the pair queue and the active set
        nonlocal counter, pairs, active
        h = el.lead
        basis.append(el)
        j = len(basis) - 1
        # pairs (i, new) grouped by lcm; a group survives when no other lcm divides
        # its own and none of its members has a lead coprime to h
        groups: dict = {}
        for i in active:
            l = _lcm(basis[i].lead, h)
            first, coprime = groups.get(l, (i, False))
            groups[l] = (first, coprime or _coprime(basis[i].lead, h))
        lcms = list(groups)
        if lcms:
            arr = np.array(lcms)
            divided = (arr[:, None, :] <= arr[None, :, :]).all(axis=2).sum(axis=0) > 1
        survivors = []
        for item in pairs:
            _, _, a, b, l = item
            if _divides(h, l) and _lcm(basis[a].lead, h) != l and _lcm(basis[b].lead, h) != l:
                continue
            survivors.append(item)
        for pos, l in enumerate(lcms):
            first, coprime = groups[l]
            if not coprime and not divided[pos]:
                survivors.append((key(l), counter, first, j, l))
                counter += 1
        heapq.heapify(survivors)
        pairs = survivors
        active = [i for i in active if not _divides(h, basis[i].lead)] + [j]

    def reducers():
        return [basis[i] for i in active]

    for terms in raw:
        el = _orient(_reduce(terms, reducers(), key), key)
        if el is not None:
            add(el)
    while pairs:
        _, _, i, j, _ = heapq.heappop(pairs)
        el = _orient(_reduce(_spoly(basis[i], basis[j]), reducers(), key), key)
        if el is not None:
            add(el)

    # the active leads are already minimal; interreduce tails
    minimal = sorted(reducers(), key=lambda g: key(g.lead))
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        el = _orient(_reduce(_as_terms(g), others, key), key)
        assert el is not None and el.lead == g.lead
        reduced.append(el)
    reduced.sort(key=lambda g: key(g.lead))
    return GroebnerBasis(tuple(reduced), order, m)


def normal_form(terms, g: GroebnerBasis) -> list:
    return _reduce(_as_terms(terms), list(g.elements), g.order.key)


def s_pairs_reduce_to_zero(g: GroebnerBasis) -> bool:
    els = list(g.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if _reduce(_spoly(els[i], els[j]), els, g.order.key):
                return False
    return True


def _default_order(order) -> TermOrder:
    if order is None:
        return TermOrder(GREVLEX)
    if isinstance(order, str):
        return TermOrder(order)
    return order


def toric_ideal(s, order=None) -> GroebnerBasis:
    """Gröbner basis of J_S = ker(Z_i -> Y^{g_i}) in the Z variables.

    Computed by eliminating Y from (Z_i - Y^{g_i}) under a block order with
    the Y block first.
    """
    s = _as_semigroup(s)
    order = _default_order(order)
    d, n = s.dim, len(s.generators)
    block = BlockOrder(d, TermOrder(GREVLEX), order)
    gens = []
    for i, g in enumerate(s.generators):
        z = tuple(0 for _ in range(d)) + tuple(1 if k == i else 0 for k in range(n))
        y = tuple(g) + (0,) * n
        gens.append([z, y])
    full = buchberger(gens, block)
    els = []
    for e in full:
        terms = _as_terms(e)
        if all(not any(t[:d]) for t in terms):
            els.append(BinomialElement(e.lead[d:], None if e.tail is None else e.tail[d:]))
    els.sort(key=lambda e: order.key(e.lead))
    return GroebnerBasis(tuple(els), order, n)


def zero_dimensional(g: GroebnerBasis, variables=None) -> bool:
    """Every listed variable has a pure power (possibly 1) among the leads."""
    variables = range(g.nvars) if variables is None else variables
    leads = g.leads()
    if not leads:
        return False
    for i in variables:
        if not any(all(x == 0 for k, x in enumerate(t) if k != i) for t in leads):
            return False
    return True


def standard_monomials(g: GroebnerBasis) -> list[IntVector]:
    """Exponents of all monomials outside the leading-term ideal, sorted."""
    if not zero_dimensional(g):
        raise PreconditionError("ideal is not zero-dimensional")
    leads = g.leads()
    n = g.nvars
    start = (0,) * n
    if any(_divides(t, start) for t in leads):
        return []
    seen = {start}
    queue = [start]
    while queue:
        t = queue.pop()
        for i in range(n):
            u = t[:i] + (t[i] + 1,) + t[i + 1:]
            if u not in seen and not any(_divides(l, u) for l in leads):
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def _monomial_complement(s, extra: list[IntVector], order):
    """(finite, standard monomials, Gröbner basis) for J_S + (Z^a : a in extra)."""
    j = toric_ideal(s, order)
    g = buchberger(list(j.elements) + [[a] for a in extra], j.order)
    if not zero_dimensional(g):
        return False, [], g
    return True, standard_monomials(g), g


def ideal_complement_groebner(ideal: SemigroupIdeal, order=None, pick=min) -> IdealComplementResult:
    """S \\ I from the standard monomials of P_S.

    ``pick`` chooses one factorization of each base point; the result does
    not depend on the choice.
    """
    s = ideal.ambient
    order = _default_order(order)
    extra = [pick(factorizations(s, u)) for u in ideal.base]
    finite, std, g = _monomial_complement(s, extra, order)
    n = len(s.generators)
    if not finite:
        return IdealComplementResult(False, (), ())
    image = [s.image(t) for t in std]
    if len(set(image)) != len(image):
        raise AlgorithmDisagreement("two standard monomials map to the same element")
    ks = []
    for i in range(n):
        # k g_i are distinct elements of S, so one of the first |std|+1 multiples lies in I
        for k in range(len(std) + 1):
            if not normal_form([tuple(k if l == i else 0 for l in range(n))], g):
                ks.append(k)
                break
        else:
            raise AlgorithmDisagreement(f"no power of Z{i + 1} in P_S although it is zero-dimensional")
    return IdealComplementResult(True, tuple(sorted(image)), tuple(ks))


def apery_groebner(s, order=None) -> list[IntVector]:
    """Ap(S, E), E the extreme rays, from J_S + (Z_i : g_i in E)."""
    s = _as_semigroup(s)
    order = _default_order(order)
    n = len(s.generators)
    rays = extreme_rays(s)
    idx = [s.generators.index(r) for r in rays]
    extra = [tuple(1 if k == i else 0 for k in range(n)) for i in idx]
    finite, std, _ = _monomial_complement(s, extra, order)
    if not finite:
        raise AlgorithmDisagreement("Apéry set with respect to extreme rays reported infinite")
    image = [s.image(t) for t in std]
    if len(set(image)) != len(image):
        raise AlgorithmDisagreement("two standard monomials map to the same element")
    return sorted(image)
