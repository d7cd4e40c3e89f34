"""Exact linear algebra: solving, invariant factors, similarity."""

import pytest

from adjreal.errors import InconsistentSystem
from adjreal.gaussian import I, ONE, ZERO, gr
from adjreal.matrix import (
    ExactMatrix,
    PolyMatrix,
    char_poly,
    det,
    eval_poly,
    invariant_factors,
    inverse,
    is_nilpotent,
    is_semisimple,
    kernel,
    minimal_polynomial,
    similar_to_negative,
    smith_invariant_factors,
    solve_linear,
)
from adjreal.oracle import rcf_similar
from adjreal.polynomial import ExactPoly, poly_gcd

from conftest import SMALL_SCALARS


def test_solve_identity():
    a = ExactMatrix.identity(2)
    part, ker = solve_linear(a, [ONE, I])
    assert part == [ONE, I]
    assert ker == []


def test_solve_zero_matrix():
    a = ExactMatrix.zeros(2)
    part, ker = solve_linear(a, [ZERO, ZERO])
    assert part == [ZERO, ZERO]
    assert len(ker) == 2


def test_solve_rank_one():
    a = ExactMatrix.from_rows([[1, 1], [1, 1]])
    part, ker = solve_linear(a, [gr(2), gr(2)])
    assert part == [gr(2), gr(0)]
    assert len(ker) == 1
    # the kernel spans (1, -1)
    v = ker[0]
    assert v[0] == -v[1]


def test_solve_inconsistent():
    a = ExactMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(InconsistentSystem):
        solve_linear(a, [ONE, ZERO])


def test_invariant_factors_distinct_diag():
    facs = invariant_factors(ExactMatrix.diagonal([1, -1]))
    x = ExactPoly.x_power(1)
    assert facs == [ExactPoly.one(), x * x - ExactPoly.one()]


def test_invariant_factors_zero_matrix():
    facs = invariant_factors(ExactMatrix.zeros(2))
    x = ExactPoly.x_power(1)
    assert facs == [x, x]


def test_invariant_factors_nilpotent_block():
    n = ExactMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    facs = invariant_factors(n)
    assert facs == [ExactPoly.one(), ExactPoly.one(), ExactPoly.x_power(3)]
    # companion-form cross-check: the shift matrix is cyclic, so its
    # minimal polynomial must equal its characteristic polynomial
    assert minimal_polynomial(n) == char_poly(n)


def test_similar_to_negative_examples():
    assert similar_to_negative(ExactMatrix.diagonal([1, -1]))
    assert not similar_to_negative(ExactMatrix.diagonal([1, 1, -1]))
    assert similar_to_negative(ExactMatrix.diagonal([1, 2, -1, -2]))


def test_semisimple_and_nilpotent_predicates():
    assert is_semisimple(ExactMatrix.diagonal([1, 1]))
    strict = ExactMatrix.from_rows([[0, 5], [0, 0]])
    assert is_nilpotent(strict)
    jordan = ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert not is_semisimple(jordan)
    assert not is_nilpotent(jordan)
    # its minimal polynomial is (x-1)^2
    m = minimal_polynomial(jordan)
    x = ExactPoly.x_power(1)
    assert m == (x - ExactPoly.one()) * (x - ExactPoly.one())


def test_semisimple_matches_minimal_polynomial_definition(rng):
    for _ in range(25):
        n = rng.randrange(2, 5)
        m = ExactMatrix(n, n, [rng.choice(SMALL_SCALARS) for _ in range(n * n)])
        mp = minimal_polynomial(m)
        squarefree = poly_gcd(mp, mp.derivative()).degree() == 0
        assert is_semisimple(m) == squarefree


def _random_matrix(rng, n):
    return ExactMatrix(n, n, [rng.choice(SMALL_SCALARS) for _ in range(n * n)])


def test_det_is_multiplicative(rng):
    for _ in range(30):
        n = rng.randrange(2, 5)
        a = _random_matrix(rng, n)
        b = _random_matrix(rng, n)
        assert det(a * b) == det(a) * det(b)


def test_invariant_factor_chain_and_product(rng):
    for _ in range(30):
        n = rng.randrange(2, 5)
        m = _random_matrix(rng, n)
        facs = invariant_factors(m)
        assert len(facs) == n
        prod = ExactPoly.one()
        for k in range(n - 1):
            assert (facs[k + 1] % facs[k]).is_zero()
        for f in facs:
            assert f.leading() == ONE
            prod = prod * f
        assert prod == char_poly(m)


def test_similarity_agrees_with_cyclic_oracle(rng):
    agree = 0
    for _ in range(60):
        m = _random_matrix(rng, 4)
        assert similar_to_negative(m) == rcf_similar(m, -m)
        agree += 1
    assert agree == 60


def test_inverse_and_kernel():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert a * inverse(a) == ExactMatrix.identity(2)
    b = ExactMatrix.from_rows([[1, 2], [2, 4]])
    ker = kernel(b)
    assert len(ker) == 1
    assert b.mul_vector(ker[0]) == [ZERO, ZERO]


def test_eval_poly_cayley_hamilton(rng):
    for _ in range(10):
        m = _random_matrix(rng, 3)
        assert eval_poly(char_poly(m), m).is_zero()


def test_poly_matrix_smith_on_characteristic_matrix():
    m = ExactMatrix.from_rows([[1, 1], [0, 1]])
    facs = smith_invariant_factors(PolyMatrix.characteristic(m))
    x = ExactPoly.x_power(1)
    assert facs == [ExactPoly.one(), (x - ExactPoly.one()) * (x - ExactPoly.one())]


def test_matrix_json_round_trip():
    m = ExactMatrix.from_rows([[gr("1/2"), I], [-I, gr(3)]])
    assert ExactMatrix.from_json(m.to_json()) == m
