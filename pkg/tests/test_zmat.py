import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphgroups.errors import InvalidInput
from graphgroups.zmat import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    integer_kernel_basis,
    rank,
    smith_normal_form,
)

from oracles import frac_det, frac_rank, matmul


def snf_ok(rows, ncols):
    m = IntMatrix.from_rows(rows, ncols)
    u, s, v = smith_normal_form(m)
    assert (u @ m @ v) == s
    assert s.is_diagonal()
    d = s.diagonal()
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz  # nonzero entries first
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    return d


def test_diag_2_3():
    assert snf_ok([[2, 0], [0, 3]], 2) == [1, 6]


def test_known_invariant_factors():
    assert snf_ok([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3) == [2, 6, 12]


def test_zero_and_empty_shapes():
    assert snf_ok([[0, 0], [0, 0]], 2) == [0, 0]
    assert snf_ok([], 3) == []
    m = IntMatrix.from_rows([], 3)
    assert m.transpose().rows == 3 and m.transpose().cols == 0


def test_random_snf_properties():
    rng = random.Random(5)
    for _ in range(500):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)]
        d = snf_ok(rows, c)
        assert sum(1 for x in d if x) == frac_rank(rows, c)


def test_square_snf_product_is_abs_det():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        d = snf_ok(rows, n)
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(frac_det(rows))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=1, max_size=6)))
def test_snf_hypothesis(rows):
    snf_ok(rows, len(rows[0]))


def test_determinant_matches_fraction_oracle():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert determinant(IntMatrix.from_rows(rows, n)) == frac_det(rows)


def test_determinant_non_square():
    with pytest.raises(InvalidInput):
        determinant(IntMatrix.from_rows([[1, 2]], 2))


def test_kernel_examples():
    assert integer_kernel_basis(IntMatrix.from_rows([[-1, 0]], 2)) == [[0, 1]]
    assert integer_kernel_basis(IntMatrix.from_rows([[1, 1]], 2)) == [[1, -1]]
    assert integer_kernel_basis(IntMatrix.from_rows([[2, 0], [0, 3]], 2)) == []
    assert integer_kernel_basis(IntMatrix.from_rows([], 2)) == [[1, 0], [0, 1]]


def test_kernel_is_saturated_lattice_basis():
    rng = random.Random(4)
    for _ in range(300):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        m = IntMatrix.from_rows(rows, c)
        basis = integer_kernel_basis(m)
        assert len(basis) == c - frac_rank(rows, c)
        for b in basis:
            assert m.apply(b) == [0] * r
        if basis:
            # the basis spans a saturated sublattice: gcd of maximal minors is 1
            _, s, _ = smith_normal_form(IntMatrix.from_rows(basis, c))
            assert all(x == 1 for x in s.diagonal())


def test_hnf_shape():
    rng = random.Random(8)
    for _ in range(300):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-10, 10) for _ in range(c)] for _ in range(r)]
        u, h = hermite_normal_form(IntMatrix.from_rows(rows, c))
        assert matmul(u.to_lists(), rows) == h.to_lists()
        assert abs(determinant(u)) == 1
        last = -1
        seen_zero = False
        for row in h.to_lists():
            nz = [j for j, x in enumerate(row) if x]
            if not nz:
                seen_zero = True
                continue
            assert not seen_zero
            p = nz[0]
            assert p > last and row[p] > 0
            for above in h.to_lists()[: h.to_lists().index(row)]:
                assert 0 <= above[p] < row[p]
            last = p


def test_rank():
    assert rank(IntMatrix.from_rows([[1, 2], [2, 4]], 2)) == 1
