"""Numerical semigroups: cofinite submonoids of N."""
from __future__ import annotations

from functools import reduce
from math import gcd

from .errors import PreconditionError


def _check_gens(gens) -> tuple[int, ...]:
    gens = tuple(sorted({int(g) for g in gens}))
    if not gens:
        raise PreconditionError("empty generator set")
    if gens[0] <= 0:
        raise PreconditionError("generators must be positive")
    return gens


def is_numerical_semigroup(gens) -> bool:
    return reduce(gcd, _check_gens(gens)) == 1


def _members_upto(gens, n: int) -> list[bool]:
    table = [False] * (n + 1)
    table[0] = True
    for v in range(1, n + 1):
        table[v] = any(g <= v and table[v - g] for g in gens)
    return table


def minimal_generators_1d(gens) -> list[int]:
    gens = _check_gens(gens)
    if reduce(gcd, gens) != 1:
        raise PreconditionError(f"gcd of {list(gens)} is not 1")
    kept: list[int] = []
    for g in gens:
        # ascending order: g is redundant iff it is a sum of smaller kept generators
        if not _members_upto(kept, g)[g]:
            kept.append(g)
    return kept


class NumericalSemigroup:
    """Submonoid of N generated by integers with gcd 1.

    Stored in minimal-generator form; two instances compare equal iff they
    describe the same set.
    """

    __slots__ = ("generators", "frobenius", "_table")

    def __init__(self, gens):
        self.generators = tuple(minimal_generators_1d(gens))
        self.frobenius = _frobenius(self.generators)
        self._table = _members_upto(self.generators, max(self.frobenius, 0))

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return self._table[n]

    def gaps(self) -> list[int]:
        return [v for v in range(self.frobenius + 1) if not self._table[v]]

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"


def _frobenius(gens: tuple[int, ...]) -> int:
    if gens[0] == 1:
        return -1
    m = gens[0]
    limit = (m - 1) * (gens[-1] - 1)  # Schur bound: F <= limit - 1
    table = _members_upto(gens, limit)
    return max(v for v in range(limit + 1) if not table[v])


def frobenius(s: NumericalSemigroup) -> int:
    """Largest integer outside ``s``; -1 when ``s`` is all of N."""
    return s.frobenius


def gaps_1d(s: NumericalSemigroup) -> list[int]:
    return s.gaps()
