import pytest
from hypothesis import given, strategies as st

from cofinite import oracles
from cofinite.diophantine import (
    _levels_exact, _levels_int64, _ray_caps, axis_projection, check_solutions, cone_rays,
    hilbert_basis, minimal_solutions, recording,
)
from cofinite.errors import DimensionMismatch, PreconditionError
from cofinite.lattice import columns, dominates_any, matrix

from conftest import HOM_EX, INHOM_EX


def test_homogeneous_example():
    hb = hilbert_basis(HOM_EX)
    assert list(hb.basis) == [
        (0, 0, 0, 1, 1, 6), (0, 0, 1, 0, 0, 2), (0, 2, 0, 0, 1, 7),
        (1, 1, 0, 0, 0, 3), (2, 0, 0, 1, 0, 5),
    ]
    assert sorted(axis_projection(hb, -1)) == [2, 3, 5, 6, 7]


def test_inhomogeneous_example():
    ms = minimal_solutions(INHOM_EX, (1, 1))
    assert set(ms.minimals) == {(0, 0, 0, 6, 1, 10), (0, 0, 1, 1, 0, 2), (1, 0, 0, 2, 0, 3)}
    assert sorted(axis_projection(ms, -1)) == [2, 3, 10]


@pytest.mark.parametrize("a,expected", [
    ([[1, -1]], [(1, 1)]),
    ([[2, -3]], [(3, 2)]),
    ([[1, 1]], []),
    ([[1, -1, 0]], [(0, 0, 1), (1, 1, 0)]),
    ([[0, 0]], [(0, 1), (1, 0)]),
])
def test_small_homogeneous(a, expected):
    assert list(hilbert_basis(a).basis) == expected


@pytest.mark.parametrize("a,b,expected", [
    ([[1]], (3,), [(3,)]),
    ([[2, -1]], (1,), [(1, 1)]),
    ([[2]], (3,), []),
    ([[1, 1]], (-1,), []),
    ([[1, -1]], (0,), [(0, 0)]),
])
def test_small_inhomogeneous(a, b, expected):
    assert list(minimal_solutions(a, b).minimals) == expected


def test_errors():
    with pytest.raises(PreconditionError):
        hilbert_basis([])
    with pytest.raises(DimensionMismatch):
        minimal_solutions([[1, 2]], (1, 2))
    with pytest.raises(IndexError):
        axis_projection([(1, 2)], 2)
    assert axis_projection([], 0) == []


def test_cone_rays_and_caps():
    assert cone_rays([(1,), (-1,), (2,)]) == [(0, 2, 1), (1, 1, 0)]
    assert _ray_caps([(1,), (1,)]) is None
    assert _ray_caps([(2,), (-3,)]) == {0: 3, 1: 2}


def test_check_solutions_rejects():
    with pytest.raises(AssertionError):
        check_solutions([[1, -1]], [(1, 1), (2, 2)])
    with pytest.raises(AssertionError):
        check_solutions([[1, -1]], [(1, 2)])


def test_recording_collects_results():
    with recording() as seen:
        hilbert_basis([[1, -1]])
        minimal_solutions([[1]], (2,))
    assert len(seen) == 2
    hilbert_basis([[1, -1]])
    assert len(seen) == 2


def test_large_entries_take_exact_path():
    big = 2 ** 70
    hb = hilbert_basis([[big, -big]])
    assert list(hb.basis) == [(1, 1)]
    ms = minimal_solutions([[big, -2 * big]], (big,))
    assert list(ms.minimals) == [(1, 0)]


systems = st.integers(1, 2).flatmap(lambda r: st.integers(2, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c).map(tuple),
                       min_size=r, max_size=r).map(tuple)))


@given(systems)
def test_hilbert_basis_sound_and_complete(a):
    basis = hilbert_basis(a).basis
    check_solutions(a, basis)
    assert oracles.is_generated_by(oracles.box_solutions(a, 8), basis)


@given(systems, st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_minimal_solutions_sound_and_complete(a, b):
    b = tuple(b[: len(a)])
    mins = minimal_solutions(a, b).minimals
    check_solutions(a, mins, b)
    for x in oracles.box_solutions(a, 8, b):
        assert dominates_any(x, mins)
    # (y, 1) is in the Hilbert basis of [A | -b] exactly for minimal y
    hom = hilbert_basis([row + (-v,) for row, v in zip(a, b)]).basis
    assert sorted(x[:-1] for x in hom if x[-1] == 1) == list(mins)


@given(systems)
def test_exact_and_vectorised_paths_agree(a):
    cols = columns(matrix(a))
    caps = _ray_caps(cols)
    if caps is None:
        return
    assert sorted(_levels_exact(cols, caps)) == sorted(_levels_int64(cols, caps))
