import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galcd.fields import make_field, embedding
from galcd.polys import (
    Poly,
    constacyclic_root,
    factor_xn_minus_lambda,
    frobenius_poly,
    minimal_poly,
    poly_from_json,
    reciprocal,
    splitting_field,
    xn_minus_lambda,
)


def _poly(field, ints):
    return Poly.from_ints(field, ints)


def test_poly_basics():
    f3 = make_field(3, 1)
    f = _poly(f3, [1, 2, 1])  # (x+1)^2
    g = _poly(f3, [1, 1])
    assert f == g * g
    q, r = divmod(f, g)
    assert q == g and r.is_zero
    assert f % g == Poly(f3, ())
    assert (f - f).is_zero
    assert f(f3.from_int(-1)).code == 0
    assert f.degree == 2 and g.degree == 1
    assert Poly(f3, ()).degree == -1


def test_poly_degree_adds_on_products():
    f5 = make_field(5, 1)
    a = _poly(f5, [2, 0, 1])
    b = _poly(f5, [3, 4])
    assert (a * b).degree == a.degree + b.degree


def test_reciprocal_examples():
    f3 = make_field(3, 1)
    assert reciprocal(_poly(f3, [1, 1])) == _poly(f3, [1, 1])
    assert reciprocal(_poly(f3, [1, 2, 1])) == _poly(f3, [1, 2, 1])
    assert reciprocal(_poly(f3, [2, 1])) == _poly(f3, [2, 1])
    f2 = make_field(2, 1)
    with pytest.raises(ValueError):
        reciprocal(_poly(f2, [0, 1]))  # f(0) = 0
    with pytest.raises(ValueError):
        reciprocal(Poly(f2, ()))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(3, 1), (2, 3), (5, 1)]), st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_reciprocal_is_an_involution_on_monic(pe, ints):
    f = make_field(*pe)
    codes = [c % f.q for c in ints]
    if codes[0] == 0:
        codes[0] = 1
    poly = Poly.make(f, codes + [1])  # monic with nonzero constant term
    assert reciprocal(reciprocal(poly)) == poly


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=4),
       st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_reciprocal_is_multiplicative_up_to_monic(ia, ib):
    f9 = make_field(3, 2)
    a = Poly.make(f9, [c % 9 for c in ia] + [1])
    b = Poly.make(f9, [c % 9 for c in ib] + [1])
    if a.codes[0] == 0 or b.codes[0] == 0:
        return
    lhs = reciprocal(a * b).monic()
    rhs = (reciprocal(a) * reciprocal(b)).monic()
    assert lhs == rhs


def test_frobenius_poly_examples():
    f8 = make_field(2, 3)
    a = f8.gen
    p = Poly.from_elements(f8, [a, f8.one])  # x + a
    assert frobenius_poly(p, 1) == Poly.from_elements(f8, [a * a, f8.one])
    assert frobenius_poly(p, f8.e) == p
    assert frobenius_poly(Poly(f8, ()), 3).is_zero


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=4),
       st.lists(st.integers(0, 8), min_size=1, max_size=4), st.integers(0, 3))
def test_frobenius_poly_commutes_with_products(ia, ib, j):
    f9 = make_field(3, 2)
    a = Poly.make(f9, [c % 9 for c in ia])
    b = Poly.make(f9, [c % 9 for c in ib])
    assert frobenius_poly(a * b, j) == frobenius_poly(a, j) * frobenius_poly(b, j)


def test_minimal_poly_forced_linear_factors():
    # theta^(rn/2) = -1 forces the factor x + 1 for the half-way coset
    f125 = make_field(5, 3)
    th = constacyclic_root(f125, 13, f125.from_int(-1))
    m = minimal_poly((13,), th, f125)
    assert m == Poly.from_ints(f125, [1, 1])

    f2197 = make_field(13, 3)
    th18 = constacyclic_root(f2197, 9, f2197.from_int(-1))
    assert minimal_poly((9,), th18, f2197) == Poly.from_ints(f2197, [1, 1])


def test_minimal_poly_degree_four_coset():
    f125 = make_field(5, 3)
    th = constacyclic_root(f125, 13, f125.from_int(-1))
    m = minimal_poly((1, 5, 21, 25), th, f125)
    assert m.degree == 4 and m.is_monic
    target = xn_minus_lambda(f125, 13, f125.from_int(-1))
    assert m.divides(target)
    # irreducible over GF(125): no roots and no quadratic factor
    assert all(m(x).code != 0 for x in f125.elements())
    ext2 = make_field(5, 6)
    emb = embedding(f125, ext2)
    lifted = Poly.make(ext2, [emb.fwd[c] for c in m.codes])
    roots_in_ext2 = sum(1 for x in ext2.elements() if lifted(x).code == 0)
    assert roots_in_ext2 == 0  # degree-4 irreducible has no roots in GF(125^2)


def test_minimal_poly_rejects_non_closed_sets():
    f125 = make_field(5, 3)
    th = constacyclic_root(f125, 13, f125.from_int(-1))
    with pytest.raises(ValueError):
        minimal_poly((1, 5), th, f125)  # proper subset of a coset


def test_minimal_poly_roots():
    f125 = make_field(5, 3)
    th = constacyclic_root(f125, 13, f125.from_int(-1))
    ext = th.field
    emb = embedding(f125, ext)
    for coset in [(1, 5, 21, 25), (3, 11, 15, 23), (7, 9, 17, 19), (13,)]:
        m = minimal_poly(coset, th, f125)
        lifted = Poly.make(ext, [emb.fwd[c] for c in m.codes])
        for i in coset:
            assert lifted(th**i).code == 0


def test_factor_xn_minus_lambda_shapes():
    f1331 = make_field(11, 3)
    fac = factor_xn_minus_lambda(5, f1331.from_int(-1))
    assert [c for c, _ in fac] == [(1,), (3,), (5,), (7,), (9,)]
    assert all(m.degree == 1 for _, m in fac)

    f125 = make_field(5, 3)
    fac = factor_xn_minus_lambda(13, f125.from_int(-1))
    assert sorted(m.degree for _, m in fac) == [1, 4, 4, 4]

    f2 = make_field(2, 1)
    fac = factor_xn_minus_lambda(1, f2.one)
    assert len(fac) == 1 and fac[0][1] == Poly.from_ints(f2, [1, 1])


def test_factor_product_reconstructs_exactly():
    for (p, e, n, lam_int) in [(3, 2, 8, 1), (5, 1, 6, -1), (11, 2, 10, 1), (13, 3, 9, -1)]:
        f = make_field(p, e)
        lam = f.from_int(lam_int)
        fac = factor_xn_minus_lambda(n, lam)
        prod = Poly(f, (1,))
        for _, m in fac:
            prod = prod * m
        assert prod == xn_minus_lambda(f, n, lam)
        assert sum(m.degree for _, m in fac) == n


def test_factor_rejects_characteristic_dividing_length():
    f = make_field(3, 2)
    with pytest.raises(ValueError):
        factor_xn_minus_lambda(6, f.one)


def test_splitting_field_orders():
    f125 = make_field(5, 3)
    assert splitting_field(f125, 26).e == 12  # ord_26(125) = 4
    f121 = make_field(11, 2)
    assert splitting_field(f121, 10) is f121  # 121 = 1 mod 10


def test_poly_json_round_trip():
    f9 = make_field(3, 2)
    poly = Poly.make(f9, [4, 0, 7, 1])
    assert poly_from_json(f9, poly.to_json()) == poly
