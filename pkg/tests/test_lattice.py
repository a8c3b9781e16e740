import pytest
from hypothesis import given, strategies as st

from cofinite.errors import DimensionMismatch, PreconditionError
from cofinite.lattice import (
    GREVLEX, GRLEX, LEX, BlockOrder, TermOrder, from_columns, matvec, minimals,
    natural_leq, nullspace, primitive, rank, term_compare,
)

vectors = st.lists(st.integers(0, 5), min_size=3, max_size=3).map(tuple)


@pytest.mark.parametrize("a,b,expected", [
    ((0, 0), (5, 7), True),
    ((1, 2), (2, 1), False),
    ((1, 0, 2), (1, 1, 2), True),
])
def test_natural_leq(a, b, expected):
    assert natural_leq(a, b) is expected


def test_natural_leq_dimension_check():
    with pytest.raises(DimensionMismatch):
        natural_leq((1,), (1, 2))


@pytest.mark.parametrize("vs,expected", [
    ([(1, 1), (1, 2), (2, 1)], [(1, 1)]),
    ([], []),
    ([(0, 3), (2, 1), (1, 2)], [(0, 3), (1, 2), (2, 1)]),
])
def test_minimals(vs, expected):
    assert sorted(minimals(vs)) == expected


@given(st.lists(vectors, max_size=12))
def test_minimals_idempotent_and_covering(vs):
    m = minimals(vs)
    assert sorted(minimals(m)) == sorted(m)
    assert all(any(natural_leq(u, v) for u in m) for v in vs)
    assert not any(u != v and natural_leq(u, v) for u in m for v in m)


@pytest.mark.parametrize("kind,a,b,expected", [
    (LEX, (1, 0), (0, 5), "greater"),
    (GRLEX, (1, 0), (0, 5), "less"),
    (GREVLEX, (2, 3), (2, 3), "equal"),
    (GREVLEX, (1, 1, 0), (2, 0, 0), "less"),
    (GRLEX, (1, 1, 0), (2, 0, 0), "less"),
])
def test_term_compare(kind, a, b, expected):
    assert term_compare(TermOrder(kind), a, b) == expected


def test_unknown_order():
    with pytest.raises(PreconditionError):
        TermOrder("revlex")


@pytest.mark.parametrize("kind", [LEX, GRLEX, GREVLEX])
@given(a=vectors, b=vectors, c=vectors)
def test_term_order_axioms(kind, a, b, c):
    o = TermOrder(kind)
    zero = (0, 0, 0)
    assert o.compare(zero, a) <= 0
    assert o.compare(a, b) == -o.compare(b, a)
    assert (o.compare(a, b) == 0) == (a == b)
    shifted = o.compare(tuple(x + z for x, z in zip(a, c)), tuple(y + z for y, z in zip(b, c)))
    assert shifted == o.compare(a, b)


def test_permuted_order():
    o = TermOrder(LEX, perm=(1, 0))
    assert o.compare((1, 0), (0, 1)) < 0


def test_block_order_eliminates_first_block():
    o = BlockOrder(1)
    assert o.compare((1, 0, 0), (0, 9, 9)) > 0
    assert o.compare((0, 1, 0), (0, 0, 1)) > 0


def test_rank_and_nullspace():
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    cols = [(1, 2), (2, 1), (3, 3)]
    kernel = nullspace(cols)
    assert len(kernel) == 1
    assert matvec(from_columns(cols), kernel[0]) == (0, 0)
    assert primitive((4, -6, 0)) == (2, -3, 0)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(tuple), min_size=1, max_size=4))
def test_nullspace_is_kernel(cols):
    a = from_columns(cols)
    kernel = nullspace(cols)
    assert len(kernel) == len(cols) - rank(cols)
    for k in kernel:
        assert matvec(a, k) == (0, 0)
    assert rank(kernel) == len(kernel) if kernel else True
