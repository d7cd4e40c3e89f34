"""Polynomial gcd, squarefree structure, and Q(i) root extraction."""

from hypothesis import given, settings, strategies as st

from adjreal.gaussian import GaussRat, I, ONE, ZERO, gr, rational
from adjreal.polynomial import (
    ExactPoly,
    linear_roots,
    poly_gcd,
    poly_xgcd,
    squarefree_decomposition,
    squarefree_part,
)

X = ExactPoly.x_power(1)
ONE_P = ExactPoly.one()


def test_gcd_shared_linear_factor():
    assert poly_gcd(X * X - ONE_P, X - ONE_P) == X - ONE_P


def test_gcd_monomials():
    assert poly_gcd(X * X, X * X * X) == X * X


def test_gcd_over_gaussian_field():
    # (x^2+1, x-i) -> x-i, confirmed by exact division
    g = poly_gcd(X * X + ONE_P, X - ExactPoly.constant(I))
    assert g == X - ExactPoly.constant(I)
    quo, rem = divmod(X * X + ONE_P, g)
    assert rem.is_zero()
    assert quo * g == X * X + ONE_P


def test_gcd_of_zeros_is_zero():
    z = ExactPoly.zero()
    assert poly_gcd(z, z).is_zero()


def small_polys(max_degree=5):
    coeff = st.integers(min_value=-4, max_value=4)
    def build(res, ims):
        return ExactPoly(
            [GaussRat(rational(r), rational(i)) for r, i in zip(res, ims)]
        )
    lists = st.lists(coeff, min_size=1, max_size=max_degree + 1)
    return st.builds(build, lists, lists)


@given(small_polys(), small_polys())
@settings(max_examples=60)
def test_gcd_divides_both_inputs(p, q):
    g = poly_gcd(p, q)
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    assert (p % g).is_zero()
    assert (q % g).is_zero()
    assert g.leading() == ONE


@given(small_polys(), small_polys())
@settings(max_examples=40)
def test_xgcd_bezout_identity(p, q):
    g, u, v = poly_xgcd(p, q)
    assert u * p + v * q == g


@given(small_polys())
@settings(max_examples=60)
def test_squarefree_part_is_squarefree(p):
    if p.degree() <= 0:
        return
    q = squarefree_part(p)
    assert poly_gcd(q, q.derivative()).degree() == 0


def test_squarefree_decomposition_rebuilds_input():
    p = ExactPoly.from_roots([ONE, ONE, -ONE, I, I, I])
    parts = squarefree_decomposition(p)
    rebuilt = ExactPoly.one()
    for f, m in parts:
        for _ in range(m):
            rebuilt = rebuilt * f
    assert rebuilt.monic() == p.monic()
    assert {m for _, m in parts} == {1, 2, 3}


def test_linear_roots_plain():
    roots, cof = linear_roots(X * X - ONE_P)
    assert sorted(map(str, roots)) == ["-1", "1"]
    assert cof == ONE_P


def test_linear_roots_gaussian():
    roots, cof = linear_roots(X * X + ONE_P)
    assert roots == [-I, I]
    assert cof == ONE_P


def test_linear_roots_irrational_cofactor():
    # sqrt(2) is not a Gaussian rational: norm-form divisor search proves
    # there is no root a/b with a | 2 and b | 1 up to units
    p = X * X - ExactPoly.constant(gr(2))
    roots, cof = linear_roots(p)
    assert roots == []
    assert cof == p
    units = [gr(1), gr(-1), I, -I]
    divisors_of_two = [gr(1), gr(1, 1), gr(2), gr(1, -1)]
    for u in units:
        for d in divisors_of_two:
            cand = u * d
            assert not p(cand).is_zero()


def test_linear_roots_multiplicity_and_reexpansion():
    r = gr("1/2") + gr(0, 3)
    p = ExactPoly.from_roots([r, r, -I]) * (X * X - ExactPoly.constant(gr(2)))
    p = p.scale(gr(0, 2))  # non-monic leading unit
    roots, cof = linear_roots(p)
    assert sorted(map(str, roots)) == sorted([str(r), str(r), "-1*i"])
    assert ExactPoly.from_roots(roots) * cof == p


@given(st.lists(st.sampled_from([0, 1, -1, 2, -3]), min_size=1, max_size=4))
@settings(max_examples=40)
def test_linear_roots_reexpansion_on_split_polys(root_ints):
    roots = [GaussRat.from_int(k) for k in root_ints]
    p = ExactPoly.from_roots(roots)
    found, cof = linear_roots(p)
    assert cof.degree() == 0
    assert ExactPoly.from_roots(found) * cof == p
    assert sorted(found, key=GaussRat.lex_key) == sorted(roots, key=GaussRat.lex_key)


def test_poly_json_round_trip():
    p = ExactPoly([gr("1/2"), ZERO, I])
    assert ExactPoly.from_json(p.to_json()) == p
