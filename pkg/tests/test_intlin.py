from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clasperkit.intlin import (
    DimensionMismatch,
    IntMatrix,
    NotSymmetric,
    Singular,
    block_diag,
    determinant,
    integer_kernel,
    nullity_mod2,
    rank_mod2,
    rational_inverse,
    signature,
    smith_normal_form,
    solve_mod2_affine,
    span_mod2,
)

from oracles import determinantal_invariant_factors, signature_descartes


def matrices(max_rows=5, max_cols=5, bound=20):
    return st.integers(0, max_rows).flatmap(
        lambda m: st.integers(0, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m).map(
                lambda rows: IntMatrix.from_rows(rows, cols=n)
            )
        )
    )


def symmetric_matrices(max_n=6, bound=6):
    def build(n, vals):
        it = iter(vals)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = next(it)
        return IntMatrix.from_rows(rows, cols=n)

    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.integers(-bound, bound), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda v: build(n, v)
        )
    )


def test_intmatrix_basics():
    A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A[1, 2] == 6
    assert A.T.tolist() == [[1, 4], [2, 5], [3, 6]]
    assert (A @ A.T).tolist() == [[14, 32], [32, 77]]
    assert A.apply([1, 0, -1]) == [-2, -2]
    assert (-A)[0, 0] == -1
    assert IntMatrix.identity(2).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(DimensionMismatch):
        A @ A


def test_snf_anchor_diag_6_4():
    assert smith_normal_form([[6, 0], [0, 4]]).diagonal == [2, 12]


def test_snf_zero_and_empty():
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    U, D, V = smith_normal_form(IntMatrix.zeros(0, 0))
    assert D.shape == (0, 0)


@given(matrices())
def test_snf_invariants(A):
    U, D, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    m, n = A.shape
    assert all(D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
    nz = [d for d in D.diag() if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(matrices(4, 4, 12))
def test_snf_matches_determinantal_divisors(A):
    nz = [d for d in smith_normal_form(A).diagonal if d]
    assert nz == determinantal_invariant_factors(A.tolist())


def test_snf_deterministic():
    A = [[4, 6, 8], [3, 9, 27], [1, 1, 2]]
    assert smith_normal_form(A) == smith_normal_form(A)


def test_snf_thousand_random_matrices():
    rng = random.Random(7)
    for _ in range(1000):
        m, n = rng.randint(0, 8), rng.randint(0, 8)
        A = IntMatrix.from_rows([[rng.randint(-99, 99) for _ in range(n)] for _ in range(m)], cols=n)
        U, D, V = smith_normal_form(A)
        assert U @ A @ V == D
        nz = [d for d in D.diag() if d]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_determinant():
    assert determinant([[2, 1], [1, 3]]) == 5
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant(IntMatrix.zeros(0, 0)) == 1


@given(matrices(4, 4))
def test_integer_kernel(A):
    for v in integer_kernel(A):
        assert A.apply(v) == [0] * A.rows
    nz = [d for d in smith_normal_form(A).diagonal if d]
    assert len(integer_kernel(A)) == A.cols - len(nz)


@pytest.mark.parametrize(
    "S, expected",
    [
        ([[1]], 1),
        ([[-3]], -1),
        ([[0, 1], [1, 0]], 0),
        ([[2, 1], [1, 3]], 2),
        ([[0]], 0),
        ([], 0),
    ],
)
def test_signature_examples(S, expected):
    assert signature(IntMatrix.from_rows(S, cols=len(S))) == expected


def test_signature_e8_is_minus_8():
    from clasperkit.corpus import E8_MATRIX

    assert signature(E8_MATRIX) == -8
    assert determinant(E8_MATRIX) == 1


def test_signature_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        signature([[0, 1], [0, 0]])


@given(symmetric_matrices())
def test_signature_matches_descartes(S):
    assert signature(S) == signature_descartes(S.tolist())


@given(symmetric_matrices(4), symmetric_matrices(4))
def test_signature_negation_and_additivity(S1, S2):
    assert signature(-S1) == -signature(S1)
    assert signature(block_diag(S1, S2)) == signature(S1) + signature(S2)


def test_rational_inverse():
    inv = rational_inverse([[2, 1], [1, 3]])
    assert [[x * 5 for x in r] for r in inv] == [[3, -1], [-1, 2]]
    with pytest.raises(Singular):
        rational_inverse([[1, 2], [2, 4]])


def test_solve_mod2_affine_example():
    sol = solve_mod2_affine([[1, 1], [1, 1]], [1, 1])
    assert sol.consistent
    assert len(sol.kernel) == 1
    assert not solve_mod2_affine([[1, 1], [1, 1]], [1, 0]).consistent


@given(symmetric_matrices(8, 9))
def test_characteristic_vectors_always_exist(B):
    sol = solve_mod2_affine(B, [d & 1 for d in B.diag()])
    assert sol.consistent
    x = sol.particular
    assert [v & 1 for v in B.apply(x)] == [d & 1 for d in B.diag()]
    assert len(sol.kernel) == nullity_mod2(B)


def test_characteristic_exists_thousand_random():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(0, 8)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-9, 9)
        B = IntMatrix.from_rows(rows, cols=n)
        assert solve_mod2_affine(B, [d & 1 for d in B.diag()]).consistent


def test_rank_and_span_mod2():
    A = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank_mod2(A) == 2
    assert nullity_mod2(A) == 1
    assert len(span_mod2([[1, 0], [0, 1], [1, 1]])) == 2
    assert span_mod2([[2, 4]]) == []
