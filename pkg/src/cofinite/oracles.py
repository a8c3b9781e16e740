"""Brute-force references used to cross-check the algorithms.

Nothing here touches the Hilbert-basis solver or the Gröbner engine: every
answer comes from enumerating a finite box and closing it under addition.
"""
from __future__ import annotations

import itertools

import numpy as np


def box_members(gens, box) -> set:
    """Elements of ⟨gens⟩ inside [0, box_1] x ... x [0, box_d]."""
    gens = [tuple(g) for g in gens if any(g)]
    members = set()
    for x in itertools.product(*(range(b + 1) for b in box)):
        if not any(x) or any(
            all(gi <= xi for gi, xi in zip(g, x))
            and tuple(xi - gi for gi, xi in zip(g, x)) in members
            for g in gens
        ):
            members.add(x)
    return members


def box_relative_gaps(c_gens, s_gens, box) -> set:
    return box_members(c_gens, box) - box_members(s_gens, box)


def box_ideal_complement(s_gens, base, box) -> set:
    """(S \\ (X + S)) inside the box."""
    members = box_members(s_gens, box)
    ideal = {v for v in members
             if any(tuple(a - b for a, b in zip(v, u)) in members for u in base)}
    return members - ideal


def in_shell(v, inner) -> bool:
    """Whether v leaves the box [0, inner]^d."""
    return any(x > inner for x in v)


def box_factorizations(gens, v) -> list:
    top = max(v) if v else 0
    n = len(gens)
    out = []
    for x in itertools.product(range(top + 1), repeat=n):
        s = [0] * len(v)
        for c, g in zip(x, gens):
            for k in range(len(v)):
                s[k] += c * g[k]
        if tuple(s) == tuple(v):
            out.append(x)
    return out


def box_solutions(a, side: int, rhs=None) -> list:
    """Every x in [0, side]^m with A x = rhs (default 0), via numpy."""
    a = np.array(a, dtype=np.int64)
    m = a.shape[1]
    rhs = np.zeros(a.shape[0], dtype=np.int64) if rhs is None else np.array(rhs, dtype=np.int64)
    grid = np.indices((side + 1,) * m, dtype=np.int64).reshape(m, -1).T
    hit = np.all(grid @ a.T == rhs, axis=1)
    return [tuple(int(v) for v in row) for row in grid[hit]]


def is_generated_by(points, basis) -> bool:
    """Every point of a downward-closed-enough solution set is an N-combination of ``basis``.

    ``points`` must contain, with each x, every x - b that is itself a
    solution; box enumeration of a homogeneous system has that property.
    """
    pts = sorted(points)
    pset = set(pts)
    ok = set()
    for x in pts:
        if not any(x):
            ok.add(x)
            continue
        for b in basis:
            r = tuple(p - q for p, q in zip(x, b))
            if all(v >= 0 for v in r) and (r in ok or (not any(r))):
                ok.add(x)
                break
    return ok == pset


def brute_axis_values(gens, g, limit: int) -> list[int]:
    """λ <= limit with λ g in ⟨gens⟩."""
    box = tuple(limit * x for x in g)
    members = box_members(gens, box)
    return [lam for lam in range(limit + 1) if tuple(lam * x for x in g) in members]


def brute_numerical_gaps(gens, upto: int) -> list[int]:
    members = box_members([(g,) for g in gens], (upto,))
    return [v for v in range(upto + 1) if (v,) not in members]
