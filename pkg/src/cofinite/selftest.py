"""Randomized cross-checks of every route against each other and brute force.

Each ``check_*`` function returns a list of human-readable problems; an
empty list means the instance passed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from . import oracles
from .affine import (
    AffineSemigroup,
    axis_generators_are_minimal_check,
    extreme_rays,
    is_C_cofinite,
    member,
    relative_gaps,
)
from .diophantine import check_solutions, hilbert_basis, minimal_solutions
from .groebner import apery_groebner, ideal_complement_groebner
from .ideal import (
    SemigroupIdeal,
    apery_extreme_rays,
    complement_by_box,
    complement_by_preimage,
    is_ideal_cofinite,
)
from .lattice import dominates_any

INNER = {1: 40, 2: 20, 3: 10}


def random_semigroup(rng: random.Random, d: int, n: int, maxc: int = 6) -> AffineSemigroup:
    gens = set()
    while len(gens) < n:
        g = tuple(rng.randint(0, maxc) for _ in range(d))
        if any(g):
            gens.add(g)
    return AffineSemigroup(sorted(gens))


def random_pair(rng: random.Random, maxc: int = 6):
    """(C, S) with S ⊆ C, both with at most five generators of coordinates <= maxc."""
    d = rng.choice((1, 2, 2, 3))
    n = rng.randint(1, 4 if d > 1 else 3)
    c = random_semigroup(rng, d, n, maxc)
    pool = sorted(oracles.box_members(c.generators, (maxc,) * d) - {(0,) * d})
    t = rng.randint(1, min(5, len(pool)))
    # favour multiples and sums of C's generators so cofinite pairs are common
    s = set()
    for g in c.generators:
        if rng.random() < 0.5 and len(s) < 5:
            s.add(g)
    while len(s) < t:
        s.add(rng.choice(pool))
    return c, AffineSemigroup(sorted(s))


def random_ideal(rng: random.Random, maxc: int = 6, cofinite: bool = False):
    d = rng.choice((1, 2, 2, 3))
    n = rng.randint(1, 4 if d > 1 else 3)
    s = random_semigroup(rng, d, n, maxc)
    gens = s.generators
    if cofinite:
        # each generator gets a multiple inside the ideal through one base point
        base = {s.image([rng.randint(1, 2) if l == i else 0 for l in range(len(gens))])
                for i in range(len(gens))}
        if len(base) > 3:
            base = set(rng.sample(sorted(base), 3))
            base.add(tuple(sum(col) for col in zip(*gens)))
    else:
        r = rng.randint(1, 2)
        base = set()
        for _ in range(r):
            coeffs = [rng.randint(0, 1) for _ in gens]
            if not any(coeffs):
                coeffs[rng.randrange(len(gens))] = 1
            base.add(s.image(coeffs))
    return SemigroupIdeal(s, sorted(base))


@dataclass
class Tally:
    instances: int = 0
    finite: int = 0
    problems: list = field(default_factory=list)

    def add(self, problems, finite=None, weight: int = 1):
        self.instances += weight
        if finite:
            self.finite += 1
        self.problems.extend(problems)


def _box(d: int, inner: int) -> tuple:
    return (2 * inner,) * d


def check_relative(c: AffineSemigroup, s: AffineSemigroup, inner: int | None = None):
    """Both cofiniteness routes plus brute force on a box twice the inner size."""
    inner = inner or INNER[c.dim]
    probs = []
    report = is_C_cofinite(c, s)
    gaps = relative_gaps(c, s)
    if report.cofinite != (gaps is not None):
        probs.append(f"C={c} S={s}: conditions say {report.cofinite}, relative_gaps says {gaps is not None}")
    brute = oracles.box_relative_gaps(c.generators, s.generators, _box(c.dim, inner))
    if gaps is not None:
        clipped = {g for g in gaps if not oracles.in_shell(g, 2 * inner)}
        if clipped != brute:
            probs.append(f"C={c} S={s}: gaps {sorted(clipped)} != brute {sorted(brute)}")
        for g in gaps:
            if not member(c, g) or member(s, g):
                probs.append(f"C={c} S={s}: {g} is not in C \\ S")
    elif not any(oracles.in_shell(g, inner) for g in brute):
        probs.append(f"C={c} S={s}: reported infinite but brute force sees no gap beyond {inner}")
    for (i, j), k in report.mixing.items():
        if k:
            gi, gj = c.generators[i], c.generators[j]
            before = tuple(a + (k - 1) * b for a, b in zip(gi, gj))
            at = tuple(a + k * b for a, b in zip(gi, gj))
            if member(s, before) or not member(s, at):
                probs.append(f"C={c} S={s}: mixing coefficient ({i},{j})={k} not minimal")
    return probs, report.cofinite


def check_ray_generators(c: AffineSemigroup, s: AffineSemigroup):
    """Run the extreme-ray minimal-generator check on every qualifying generator of C."""
    probs, count = [], 0
    rays = set(extreme_rays(c))
    for i, g in enumerate(c.generators):
        if g in rays and reduce(gcd, g) == 1:
            count += 1
            if not axis_generators_are_minimal_check(c, s, i):
                probs.append(f"C={c} S={s} i={i}: ray generator check returned False")
    return probs, count


def check_ideal(ideal: SemigroupIdeal, inner: int | None = None):
    """Box, preimage and Gröbner routes against each other and brute force."""
    s = ideal.ambient
    inner = inner or INNER[s.dim]
    probs = []
    witness = is_ideal_cofinite(ideal)
    results = {
        "box": complement_by_box(ideal),
        "preimage": complement_by_preimage(ideal),
        "groebner": ideal_complement_groebner(ideal),
    }
    tag = f"S={s} X={list(ideal.base)}"
    for name, r in results.items():
        if r.finite != witness.finite:
            probs.append(f"{tag}: {name} finite={r.finite}, multiple test says {witness.finite}")
    finite = [r.complement for r in results.values() if r.finite]
    if finite and any(f != finite[0] for f in finite):
        probs.append(f"{tag}: complements differ {[list(f) for f in finite]}")
    brute = oracles.box_ideal_complement(s.generators, ideal.base, _box(s.dim, inner))
    if witness.finite:
        comp = results["box"].complement
        clipped = {v for v in comp if not oracles.in_shell(v, 2 * inner)}
        if clipped != brute:
            probs.append(f"{tag}: complement {sorted(clipped)} != brute {sorted(brute)}")
    elif not any(oracles.in_shell(v, inner) for v in brute):
        probs.append(f"{tag}: reported infinite but brute force sees nothing beyond {inner}")
    return probs, witness.finite


def check_apery(s: AffineSemigroup, inner: int | None = None):
    inner = inner or INNER[s.dim]
    probs = []
    a = apery_extreme_rays(s)
    b = apery_groebner(s)
    if a != b:
        probs.append(f"S={s}: Apéry sets differ {a} vs {b}")
    brute = oracles.box_ideal_complement(s.generators, extreme_rays(s), _box(s.dim, inner))
    clipped = {v for v in a if not oracles.in_shell(v, 2 * inner)}
    if clipped != brute:
        probs.append(f"S={s}: Apéry {sorted(clipped)} != brute {sorted(brute)}")
    return probs


def check_solver(a, rhs=None, side: int = 12):
    """Soundness, incomparability and box completeness of the Diophantine solver."""
    probs = []
    cols = len(a[0])
    if rhs is None:
        basis = hilbert_basis(a).basis
        try:
            check_solutions(a, basis)
        except AssertionError as e:
            probs.append(f"A={a}: {e}")
        sols = oracles.box_solutions(a, side)
        if not oracles.is_generated_by(sols, basis):
            probs.append(f"A={a}: box solution not generated by the Hilbert basis")
    else:
        mins = minimal_solutions(a, rhs).minimals
        try:
            check_solutions(a, mins, rhs)
        except AssertionError as e:
            probs.append(f"A={a} b={rhs}: {e}")
        for x in oracles.box_solutions(a, side, rhs):
            if not dominates_any(x, mins):
                probs.append(f"A={a} b={rhs}: solution {x} dominates no minimal solution")
                break
        # homogenisation identity
        hom = hilbert_basis([row + (-b,) for row, b in zip(a, rhs)]).basis
        lifted = sorted(x[:cols] for x in hom if x[-1] == 1)
        if lifted != list(mins):
            probs.append(f"A={a} b={rhs}: homogenisation identity fails")
    return probs


def random_system(rng: random.Random, rows: int | None = None, cols: int | None = None):
    rows = rows or rng.randint(1, 2)
    cols = cols or rng.randint(2, 5)
    while True:
        a = tuple(tuple(rng.randint(-4, 4) for _ in range(cols)) for _ in range(rows))
        if any(any(r) for r in a):
            return a


def run_selftest(seed: int = 0, count: int = 20, log=None) -> dict:
    """Run every randomized check ``count`` times; return tallies."""
    rng = random.Random(seed)
    tallies = {k: Tally() for k in ("relative", "ray_generators", "ideal", "apery", "solver")}
    for _ in range(count):
        c, s = random_pair(rng)
        probs, fin = check_relative(c, s)
        tallies["relative"].add(probs, fin)
        if fin:
            p, count = check_ray_generators(c, s)
            tallies["ray_generators"].add(p, weight=count)
        ideal = random_ideal(rng, cofinite=rng.random() < 0.5)
        probs, fin = check_ideal(ideal)
        tallies["ideal"].add(probs, fin)
        tallies["apery"].add(check_apery(random_semigroup(rng, rng.choice((1, 2, 3)), rng.randint(1, 4))))
        a = random_system(rng)
        rhs = None if rng.random() < 0.5 else tuple(rng.randint(-4, 4) for _ in a)
        tallies["solver"].add(check_solver(a, rhs, side=12 if len(a[0]) <= 4 else 8))
        if log:
            log(".")
    return tallies
