"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run under pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cofinite import oracles  # noqa: E402
from cofinite.affine import (  # noqa: E402
    AffineSemigroup, axis_semigroup, gaps_Nn, mixing_coefficient, preimage_monoid_generators, relative_gaps,
)
from cofinite.diophantine import (  # noqa: E402
    HomogeneousSolutionBasis, axis_projection, hilbert_basis, minimal_solutions, recording,
)
from cofinite.groebner import ideal_complement_groebner  # noqa: E402
from cofinite.ideal import (  # noqa: E402
    apery, complement_by_box, complement_by_preimage, is_ideal_cofinite,
)
from cofinite.lattice import dominates_any  # noqa: E402
from cofinite.numerical import minimal_generators_1d  # noqa: E402
from cofinite.selftest import (  # noqa: E402
    check_apery, check_ideal, check_ray_generators, check_relative, random_ideal, random_pair,
    random_semigroup, random_system,
)
from conftest import C_EX, HOM_EX, INHOM_EX, PREIMAGE_GENS, S_EX  # noqa: E402

RESULTS: dict[int, str] = {}
RECORDED: list = []
BOX_POINTS = 200_000


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[n] = line
    print(line)


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def criterion_1():
    def work():
        hb = hilbert_basis(HOM_EX)
        proj = axis_projection(hb, -1)
        return hb, proj, minimal_generators_1d(proj)

    (hb, proj, mg), secs = timed(work)
    ok = (set(hb.basis) == {(0, 0, 0, 1, 1, 6), (0, 0, 1, 0, 0, 2), (0, 2, 0, 0, 1, 7),
                            (1, 1, 0, 0, 0, 3), (2, 0, 0, 1, 0, 5)}
          and sorted(proj) == [2, 3, 5, 6, 7] and mg == [2, 3] and secs < 1)
    report(1, ok, f"5 basis vectors, projection {proj}, generators {mg}, {secs:.2f}s")
    return ok


def criterion_2():
    def work():
        return minimal_solutions(INHOM_EX, (1, 1)), mixing_coefficient(C_EX, S_EX, 0, 2)

    (ms, n13), secs = timed(work)
    ok = (set(ms.minimals) == {(0, 0, 0, 6, 1, 10), (0, 0, 1, 1, 0, 2), (1, 0, 0, 2, 0, 3)}
          and n13 == 2 and secs < 1)
    report(2, ok, f"{len(ms)} minimal solutions, mixing coefficient {n13}, {secs:.2f}s")
    return ok


def criterion_3():
    def work():
        b = preimage_monoid_generators(C_EX, S_EX)
        return b, gaps_Nn(b), relative_gaps(C_EX, S_EX)

    (b, h, gaps), secs = timed(work)
    ok = (b == PREIMAGE_GENS and set(h) == {(1, 0, 0, 0), (1, 0, 1, 0), (1, 1, 0, 0)}
          and set(gaps) == {(1, 1), (2, 3), (3, 2)} and secs < 5)
    report(3, ok, f"{len(b)} preimage generators, gaps {gaps}, {secs:.2f}s")
    return ok


def criterion_4(count: int = 100):
    rng = random.Random(2024)
    problems, finite_pairs, finite_ideals = [], 0, 0

    def work():
        nonlocal finite_pairs, finite_ideals
        with recording() as seen:
            for _ in range(count):
                c, s = random_pair(rng)
                probs, fin = check_relative(c, s)
                problems.extend(probs)
                finite_pairs += bool(fin)
                ideal = random_ideal(rng, cofinite=rng.random() < 0.5)
                probs, fin = check_ideal(ideal)
                problems.extend(probs)
                finite_ideals += bool(fin)
        RECORDED.extend(seen)

    _, secs = timed(work)
    ok = not problems and secs < 120
    report(4, ok, f"{count} pairs ({finite_pairs} cofinite), {count} ideals ({finite_ideals} cofinite), "
                  f"{len(problems)} disagreements, {secs:.1f}s")
    return ok, problems


def criterion_5(count: int = 100):
    rng = random.Random(77)
    problems, seen_ideals = [], 0

    def work():
        nonlocal seen_ideals
        with recording() as seen:
            while seen_ideals < count:
                ideal = random_ideal(rng, cofinite=True)
                if not is_ideal_cofinite(ideal).finite:
                    continue
                seen_ideals += 1
                box = complement_by_box(ideal)
                pre = complement_by_preimage(ideal)
                gb = ideal_complement_groebner(ideal)
                if not (box.finite and pre.finite and gb.finite):
                    problems.append(f"{ideal}: a route reported infinite")
                elif not set(box.complement) == set(pre.complement) == set(gb.complement):
                    problems.append(f"{ideal}: {box.complement} / {pre.complement} / {gb.complement}")
        RECORDED.extend(seen)

    _, secs = timed(work)
    ok = not problems and secs < 300
    report(5, ok, f"{seen_ideals} cofinite ideals, {len(problems)} disagreements, {secs:.1f}s")
    return ok, problems


def criterion_6(count: int = 30):
    rng = random.Random(6)
    problems, finite = [], 0
    with recording() as seen:
        for _ in range(count):
            d = rng.choice((1, 2, 2, 3))
            s = random_semigroup(rng, d, rng.randint(1, 4))
            problems.extend(check_apery(s))
            x = sorted({s.image([rng.randint(0, 2) for _ in s.generators]) for _ in range(2)})
            ap = apery(s, x)
            inner = {1: 40, 2: 20, 3: 10}[d]
            brute = oracles.box_ideal_complement(s.generators, x, (2 * inner,) * d)
            if ap is None:
                if not any(oracles.in_shell(v, inner) for v in brute):
                    problems.append(f"S={s} X={x}: infinite but brute force sees nothing far out")
            else:
                finite += 1
                if {v for v in ap if not oracles.in_shell(v, 2 * inner)} != brute:
                    problems.append(f"S={s} X={x}: Apéry set differs from brute force")
    RECORDED.extend(seen)
    ok = not problems
    report(6, ok, f"{count} semigroups with extreme rays, {count} random X ({finite} finite), "
                  f"{len(problems)} disagreements")
    return ok, problems


def _box_side(m: int) -> int:
    side = 12
    while side > 1 and (side + 1) ** m > BOX_POINTS:
        side -= 1
    return side


def _solver_violations(result) -> list:
    a = result.system
    homogeneous = isinstance(result, HomogeneousSolutionBasis)
    vectors = list(result.basis if homogeneous else result.minimals)
    rhs = (0,) * len(a) if homogeneous else result.rhs
    out = []
    for v in vectors:
        if any(x < 0 for x in v) or tuple(sum(r * x for r, x in zip(row, v)) for row in a) != tuple(rhs):
            out.append(f"A={a} b={rhs}: {v} is not a solution")
    for i, u in enumerate(vectors):
        for w in vectors[i + 1:]:
            if all(x <= y for x, y in zip(u, w)) or all(y <= x for x, y in zip(u, w)):
                out.append(f"A={a} b={rhs}: {u} and {w} are comparable")
    if max(abs(x) for row in a for x in row) < 2 ** 20 and max(map(abs, rhs), default=0) < 2 ** 20:
        side = _box_side(len(a[0]))
        sols = oracles.box_solutions(a, side, None if homogeneous else rhs)
        if homogeneous:
            if not oracles.is_generated_by(sols, vectors):
                out.append(f"A={a}: a box solution is not generated by the basis")
        elif any(not dominates_any(x, vectors) for x in sols):
            out.append(f"A={a} b={rhs}: a box solution dominates no minimal solution")
    return out


def criterion_7(extra: int = 200):
    rng = random.Random(7)
    with recording() as seen:
        for _ in range(extra):
            a = random_system(rng)
            hilbert_basis(a)
            minimal_solutions(a, tuple(rng.randint(-4, 4) for _ in a))
    outputs = RECORDED + seen
    unique = {}
    for r in outputs:
        key = (r.system, getattr(r, "rhs", None))
        unique.setdefault(key, r)
    problems = []
    for r in unique.values():
        problems.extend(_solver_violations(r))
    ok = not problems
    report(7, ok, f"{len(outputs)} solver outputs ({len(unique)} distinct systems), "
                  f"{len(problems)} violations")
    return ok, problems


def criterion_8(target: int = 100):
    rng = random.Random(8)
    problems, checks, pairs = [], 0, 0
    while checks < target:
        c, s = random_pair(rng)
        if relative_gaps(c, s) is None:
            continue
        pairs += 1
        probs, n = check_ray_generators(c, s)
        problems.extend(probs)
        checks += n
    # the running example: both extreme rays of C qualify
    for i in (1, 3):
        if axis_semigroup(C_EX, S_EX, i) is None:
            problems.append(f"no axis semigroup for generator {i}")
    probs, n = check_ray_generators(AffineSemigroup(C_EX), AffineSemigroup(S_EX))
    problems.extend(probs)
    checks += n
    ok = not problems
    report(8, ok, f"{checks} qualifying generators over {pairs + 1} cofinite pairs, {len(problems)} false")
    return ok, problems


def test_criterion_1_homogeneous_example():
    assert criterion_1()


def test_criterion_2_inhomogeneous_example():
    assert criterion_2()


def test_criterion_3_relative_gaps_example():
    assert criterion_3()


def test_criterion_4_finiteness_equivalences():
    ok, problems = criterion_4()
    assert ok, problems[:5]


def test_criterion_5_cross_algorithm():
    ok, problems = criterion_5()
    assert ok, problems[:5]


def test_criterion_6_apery():
    ok, problems = criterion_6()
    assert ok, problems[:5]


def test_criterion_7_solver_invariants():
    ok, problems = criterion_7()
    assert ok, problems[:5]


def test_criterion_8_ray_generators():
    ok, problems = criterion_8()
    assert ok, problems[:5]


if __name__ == "__main__":
    outcomes = [criterion_1(), criterion_2(), criterion_3()]
    outcomes += [criterion_4()[0], criterion_5()[0], criterion_6()[0], criterion_7()[0], criterion_8()[0]]
    sys.exit(0 if all(outcomes) else 1)
