import random
from fractions import Fraction

import pytest

from kfano import linalg as L

# columns are the rays s0, s1, x, x2, x3, x4, x5 of the rank-5 ambient fan
RAY_MAP = [
    [0, -1, -1, 1, 0, 0, 0],
    [0, -1, -1, 0, 1, 0, 0],
    [-1, 0, -1, 0, 0, 1, 0],
    [-1, 0, -1, 0, 0, 0, 1],
    [1, -1, 0, 0, 0, 0, 0],
]

def test_hnf_identity():
    H, U = L.hermite_normal_form(L.identity(3))
    assert H == L.identity(3) and U == L.identity(3)


def test_hnf_small_example():
    A = [[2, 4], [6, 8]]
    H, U = L.hermite_normal_form(A)
    # pivots 2 and 4; the entry above the second pivot reduced into [0, 4)
    assert H == [[2, 0], [0, 4]]
    assert L.matmul(U, A) == H
    assert abs(L.determinant(U)) == 1


def test_hnf_ray_map_full_rank():
    H, U = L.hermite_normal_form(RAY_MAP)
    assert sum(1 for row in H if any(row)) == 5
    assert L.matmul(U, RAY_MAP) == H and abs(L.determinant(U)) == 1


def test_integer_kernel_examples():
    assert L.integer_kernel([[0, 0, 0]]) == L.identity(3)
    assert L.integer_kernel([[1, -1]]) == [[1, 1]]


def test_snf_examples():
    S, U, V = L.smith_normal_form([[2, 0], [0, 3]])
    assert S == [[1, 0], [0, 6]]
    assert L.matmul(L.matmul(U, [[2, 0], [0, 3]]), V) == S
    assert L.smith_normal_form(L.identity(3))[0] == L.identity(3)
    # cone over a triangular facet of the non-Gorenstein example
    assert L.elementary_divisors([[0, -1, -1], [1, 0, 1], [1, 1, -1]]) == [1, 1, 3]


def test_rational_helpers():
    assert L.rank([[1, 2], [2, 4]]) == 1
    x = L.solve_rational([[2, 0], [0, 3]], [1, 1])
    assert list(x) == [Fraction(1, 2), Fraction(1, 3)]
    assert L.primitive([4, -6, 0]) == (2, -3, 0) or list(L.primitive([4, -6, 0])) == [2, -3, 0]


def _random_matrix(rng, r, c, bound=4):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def test_random_kernels_and_normal_forms():
    rng = random.Random(7)
    for _ in range(200):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        A = _random_matrix(rng, r, c)
        K = L.integer_kernel(A)
        assert L.rank(A) + len(K) == c
        for v in K:
            assert not any(L.matvec(A, v))
        if K:
            # saturated: the kernel basis spans a primitive sublattice
            assert set(L.elementary_divisors(K)) <= {1}
        H, U = L.hermite_normal_form(A)
        assert L.matmul(U, A) == H and abs(L.determinant(U)) == 1
        S, U2, V2 = L.smith_normal_form(A)
        assert L.matmul(L.matmul(U2, A), V2) == S
        assert abs(L.determinant(U2)) == 1 and abs(L.determinant(V2)) == 1
        d = [S[i][i] for i in range(min(r, c)) if S[i][i]]
        assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_weight_rows_span_ray_map_kernel():
    K = L.integer_kernel(RAY_MAP)
    assert len(K) == 2
    target = [[1, 1, -1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 1]]
    assert L.rank(K + target) == 2
    for row in target:
        assert not any(L.matvec(RAY_MAP, row))
