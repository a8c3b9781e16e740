"""Non-negative integer solutions of linear Diophantine systems.

Both the Hilbert basis of ``A x = 0`` and the minimal solutions of
``A x = b`` come out of one completion procedure (Contejean and Devie):
start from the unit vectors and grow a node ``x`` by ``e_j`` only when
``<A x, A e_j> < 0``, i.e. when the step moves ``A x`` back towards the origin.
Nodes that dominate an already found solution are dropped.
"""
from __future__ import annotations

import itertools
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DimensionMismatch, PreconditionError
from .lattice import IntMatrix, IntVector, columns, matrix, matvec, nullspace, rank


@dataclass(frozen=True)
class HomogeneousSolutionBasis:
    system: IntMatrix
    basis: tuple  # sorted tuple of IntVector

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


@dataclass(frozen=True)
class InhomogeneousMinimalSolutions:
    system: IntMatrix
    rhs: IntVector
    minimals: tuple  # sorted tuple of IntVector; empty means no solution

    def __iter__(self):
        return iter(self.minimals)

    def __len__(self):
        return len(self.minimals)


_sinks: list[list] = []


@contextmanager
def recording():
    """Collect every solver result produced inside the ``with`` block."""
    sink: list = []
    _sinks.append(sink)
    try:
        yield sink
    finally:
        _sinks.remove(sink)


def _emit(result):
    for sink in _sinks:
        sink.append(result)
    return result


def cone_rays(cols: list[IntVector]) -> list[IntVector]:
    """Extreme rays of {x >= 0 : sum(x_j * cols[j]) = 0}.

    These are the sign-constant circuits: supports T with a one-dimensional
    kernel whose generator has no zero entry on T.  Circuits have at most
    rank + 1 columns, so the enumeration stays small at desk scale.
    """
    m = len(cols)
    r = rank(cols)
    rays = set()
    for size in range(1, min(m, r + 1) + 1):
        for support in itertools.combinations(range(m), size):
            ker = nullspace([cols[j] for j in support])
            if len(ker) != 1 or 0 in ker[0]:
                continue
            v = ker[0]
            if all(x > 0 for x in v) or all(x < 0 for x in v):
                full = [0] * m
                for j, x in zip(support, v):
                    full[j] = abs(x)
                rays.add(tuple(full))
    return sorted(rays)


def _ray_caps(cols: list[IntVector]) -> dict[int, int] | None:
    """Coordinate bounds valid for every Hilbert basis element, None if the cone is {0}.

    An irreducible element is either an extreme ray or sum(λ_i r_i) with
    0 <= λ_i < 1 over at most dim-many linearly independent rays r_i.
    """
    rays = cone_rays(cols)
    if not rays:
        return None
    k = rank(rays)
    return {j: sum(sorted((r[j] for r in rays), reverse=True)[:k]) for j in range(len(cols))}


def _complete(cols: list[IntVector], caps: Mapping[int, int] | None = None) -> list[IntVector]:
    """Contejean-Devie completion over the columns ``cols``.

    ``caps`` bounds individual coordinates of every explored node; bounding a
    coordinate never loses a solution within the bound, because coordinates
    only grow along a search path.  The extreme-ray bounds of ``_ray_caps``
    are always added, which also guarantees termination.
    """
    d = len(cols[0]) if cols else 0
    bounds = _ray_caps(cols) if cols else None
    if bounds is None:
        return []
    for j, c in (caps or {}).items():
        bounds[j] = min(bounds[j], c)
    caps = bounds
    if all(c < 1 for c in caps.values()):
        return []
    # |Ax| is bounded through the caps; int64 is used only when it cannot overflow
    top = max(abs(v) for col in cols for v in col)
    if sum(caps.values()) * top * top * d < 2 ** 62:
        return _levels_int64(cols, caps)
    return _levels_exact(cols, caps)


def _levels_int64(cols: list[IntVector], caps: dict[int, int]) -> list[IntVector]:
    """Breadth-first levels as numpy arrays, one vectorised step per level."""
    m, d = len(cols), len(cols[0])
    a = np.array(cols, dtype=np.int64).T.reshape(d, m)
    cap = np.array([caps[j] for j in range(m)], dtype=np.int64)
    found = np.zeros((0, m), dtype=np.int64)
    x = np.eye(m, dtype=np.int64)[np.flatnonzero(cap >= 1)]
    ax = x @ a.T
    while len(x):
        order = np.lexsort(x.T[::-1])
        x, ax = x[order], ax[order]
        hit = ~ax.any(axis=1)
        found = np.vstack([found, x[hit]])
        x, ax = x[~hit], ax[~hit]
        # grow x by e_j where <Ax, A e_j> < 0 and the cap allows it
        rows, js = np.nonzero((ax @ a < 0) & (x < cap))
        if not len(rows):
            break
        y = x[rows]
        y[np.arange(len(rows)), js] += 1
        y, first = np.unique(y, axis=0, return_index=True)
        ay = ax[rows[first]] + a.T[js[first]]
        if len(found):
            dominated = (y[:, None, :] >= found[None, :, :]).all(axis=2).any(axis=1)
            y, ay = y[~dominated], ay[~dominated]
        x, ax = y, ay
    return [tuple(int(v) for v in row) for row in found]


def _levels_exact(cols: list[IntVector], caps: dict[int, int]) -> list[IntVector]:
    """The same search on Python ints, for entries too large for int64."""
    m, d = len(cols), len(cols[0])
    found: list[IntVector] = []
    frontier = {tuple(int(k == j) for k in range(m)): cols[j] for j in range(m) if caps[j] >= 1}
    zero = (0,) * d
    while frontier:
        live = []
        for x in sorted(frontier):
            if frontier[x] == zero:
                found.append(x)
            else:
                live.append((x, frontier[x]))
        nxt: dict[IntVector, IntVector] = {}
        for x, ax in live:
            for j, cj in enumerate(cols):
                if x[j] >= caps[j] or sum(p * q for p, q in zip(ax, cj)) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt or any(all(p <= q for p, q in zip(b, y)) for b in found):
                    continue
                nxt[y] = tuple(p + q for p, q in zip(ax, cj))
        frontier = nxt
    return found


def hilbert_basis(a) -> HomogeneousSolutionBasis:
    """Hilbert basis of the monoid ``{x in N^m : A x = 0}``.

    ``a`` is a matrix given by rows; entries may be negative.  An empty basis
    means that 0 is the only solution.
    """
    a = matrix(a)
    if not a or not a[0]:
        raise PreconditionError("system needs at least one row and one column")
    basis = _complete(columns(a))
    return _emit(HomogeneousSolutionBasis(a, tuple(sorted(basis))))


def minimal_solutions(a, b) -> InhomogeneousMinimalSolutions:
    """Componentwise-minimal elements of ``{x in N^m : A x = b}``.

    Solved through the homogenised system ``[A | -b]`` with the extra
    coordinate capped at 1: ``y`` is a minimal solution iff ``(y, 1)`` lies in
    the Hilbert basis of ``[A | -b]``.
    """
    a = matrix(a)
    b = tuple(int(v) for v in b)
    if not a or not a[0]:
        raise PreconditionError("system needs at least one row and one column")
    if len(b) != len(a):
        raise DimensionMismatch(f"rhs has {len(b)} entries, system has {len(a)} rows")
    cols = columns(a) + [tuple(-v for v in b)]
    m = len(cols) - 1
    found = _complete(cols, caps={m: 1})
    sols = sorted(x[:m] for x in found if x[m] == 1)
    return _emit(InhomogeneousMinimalSolutions(a, b, tuple(sols)))


def axis_projection(solutions, k: int) -> list[int]:
    """The ``k``-th coordinate of every vector, in the stored order.

    Negative ``k`` counts from the end, so ``-1`` is the last coordinate.
    """
    vectors = list(solutions)
    if not vectors:
        return []
    m = len(vectors[0])
    if not -m <= k < m:
        raise IndexError(f"coordinate {k} out of range for dimension {m}")
    return [v[k] for v in vectors]


def check_solutions(a, vectors, rhs=None) -> None:
    """Assert soundness (A v = rhs) and pairwise incomparability."""
    a = matrix(a)
    target = tuple(rhs) if rhs is not None else (0,) * len(a)
    for v in vectors:
        if any(x < 0 for x in v):
            raise AssertionError(f"negative entry in {v}")
        if matvec(a, v) != target:
            raise AssertionError(f"{v} does not solve the system")
    vs = list(vectors)
    for i, u in enumerate(vs):
        for w in vs[i + 1:]:
            if all(x <= y for x, y in zip(u, w)) or all(y <= x for x, y in zip(u, w)):
                raise AssertionError(f"{u} and {w} are comparable")
