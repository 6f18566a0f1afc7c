"""Rational and integer matrix routines."""

import random
from fractions import Fraction

import pytest

from canon4.linalg import (
    det_fraction,
    frac_matrix,
    identity,
    integer_kernel,
    invert,
    is_unimodular,
    mat_mul,
    mat_vec,
    nullspace,
    primitive_vector,
    rank,
    smith_diagonal,
    smith_normal_form,
    solve_linear,
)


def rand_matrix(rng, n, m, lo=-5, hi=5):
    return [[Fraction(rng.randrange(lo, hi + 1)) for _ in range(m)] for _ in range(n)]


def test_rank_of_known_matrices():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 0], [0, 1, 0]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0


def test_nullspace_vectors_annihilate():
    A = frac_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    ns = nullspace(A)
    assert len(ns) == 3 - rank(A)
    for v in ns:
        assert all(x == 0 for x in mat_vec(A, v))


def test_solve_linear_recovers_constructed_solution():
    rng = random.Random(4821)
    for _ in range(10):
        A = rand_matrix(rng, 4, 4)
        x = [Fraction(rng.randrange(-3, 4), rng.randrange(1, 3)) for _ in range(4)]
        b = mat_vec(A, x)
        sol = solve_linear(A, b)
        assert sol is not None
        assert mat_vec(A, sol) == b


def test_determinant_and_inverse():
    A = frac_matrix([[2, 1], [7, 4]])
    assert det_fraction(A) == 1
    assert mat_mul(invert(A), A) == identity(2, Fraction(1))
    rng = random.Random(99)
    for _ in range(8):
        B = rand_matrix(rng, 3, 3)
        C = rand_matrix(rng, 3, 3)
        assert det_fraction(mat_mul(B, C)) == det_fraction(B) * det_fraction(C)


def test_invert_rejects_singular():
    with pytest.raises(ValueError):
        invert([[1, 2], [2, 4]])


def test_primitive_vector_normalization():
    assert primitive_vector([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert primitive_vector([-2, 4, -6]) == [1, -2, 3]
    assert primitive_vector([0, Fraction(-5, 7)]) == [0, 1]
    with pytest.raises(ValueError):
        primitive_vector([0, 0])


def test_primitive_vector_scale_invariant():
    rng = random.Random(7)
    for _ in range(20):
        v = [Fraction(rng.randrange(-6, 7)) for _ in range(4)]
        if all(x == 0 for x in v):
            continue
        s = Fraction(rng.randrange(1, 5), rng.randrange(1, 5))
        assert primitive_vector(v) == primitive_vector([s * x for x in v])


def test_smith_form_transforms_and_chain():
    rng = random.Random(123)
    for _ in range(10):
        M = [[rng.randrange(-4, 5) for _ in range(3)] for _ in range(3)]
        U, D, V = smith_normal_form(M)
        assert is_unimodular(U) and is_unimodular(V)
        UMV = mat_mul(mat_mul(U, [[Fraction(x) for x in r] for r in M]), V)
        assert [[int(x) for x in r] for r in UMV] == D
        diag = [D[i][i] for i in range(3)]
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0


def test_smith_diagonal_of_root_grams():
    a2 = [[2, -1], [-1, 2]]
    assert smith_diagonal(a2) == [1, 3]
    hyperbolic = [[0, 1], [1, 0]]
    assert smith_diagonal(hyperbolic) == [1, 1]


def test_integer_kernel():
    M = [[2, 4, 6], [1, 2, 3]]
    ker = integer_kernel(M)
    assert len(ker) == 2
    for v in ker:
        assert all(isinstance(x, int) for x in v)
        assert all(sum(row[j] * v[j] for j in range(3)) == 0 for row in M)
