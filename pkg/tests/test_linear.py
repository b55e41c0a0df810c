import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galcd import linalg
from galcd.fields import make_field, sqrt_minus_one
from galcd.linear import (
    BudgetExceeded,
    CodeParams,
    LinearCode,
    extend_lcd,
    galois_dual,
    galois_inner_product,
    is_galois_lcd,
    min_distance,
    p_power_code,
)
from oracles import brute_min_distance, hull_dim, literal_intersection_dim


def _ex24_code():
    f8 = make_field(2, 3)
    a = f8.gen
    return f8, LinearCode(f8, [[f8.one, f8.zero, a, a], [f8.zero, f8.one, f8.one, a]])


def _random_code(rng, field, l, n):
    while True:
        rows = [[field.from_code(rng.randrange(field.q)) for _ in range(n)] for _ in range(l)]
        try:
            return LinearCode(field, rows)
        except ValueError:
            continue


def test_linear_code_construction_and_validation():
    f8, C = _ex24_code()
    assert (C.n, C.dim) == (4, 2)
    with pytest.raises(ValueError):
        LinearCode(f8, [[f8.one, f8.one], [f8.one, f8.one]])  # dependent rows
    with pytest.raises(ValueError):
        LinearCode(f8, [[f8.one], [f8.one, f8.zero]])  # ragged
    with pytest.raises(ValueError):
        LinearCode(f8, [], )  # dim 0 needs a length
    zero = LinearCode(f8, [], n=4)
    assert zero.dim == 0 and zero.n == 4
    with pytest.raises(ValueError):
        LinearCode(f8, [[3, 1]])  # 3 is not below p = 2


def test_linear_code_json_round_trip():
    _, C = _ex24_code()
    assert LinearCode.from_json(C.to_json()) == C


def test_galois_inner_product_examples():
    f2 = make_field(2, 1)
    assert not galois_inner_product([f2.one, f2.one], [f2.one, f2.one], 0)
    f8, _ = _ex24_code()
    a = f8.gen
    assert not galois_inner_product([a], [f8.zero], 1)
    assert galois_inner_product([a], [a], 1) == a**3
    with pytest.raises(ValueError):
        galois_inner_product([a], [a, a], 1)


def test_p_power_code_identity_cases():
    _, C = _ex24_code()
    assert p_power_code(C, 0).rows == C.rows
    assert p_power_code(C, 3).rows == C.rows


def test_p_power_code_entries_match_ex24():
    f8, C = _ex24_code()
    a = f8.gen
    powered = p_power_code(C, 2)
    assert powered.generator()[0][2] == a**4
    assert powered.generator()[1][3] == a**4


def test_p_power_preserves_distance():
    rng = random.Random(9)
    f9 = make_field(3, 2)
    for _ in range(10):
        C = _random_code(rng, f9, 2, 5)
        for j in (1, 2, 3):
            assert min_distance(C).d == min_distance(p_power_code(C, j)).d


def test_galois_dual_trivial_cases():
    f2 = make_field(2, 1)
    full = LinearCode(f2, [[1, 0], [0, 1]])
    assert galois_dual(full, 0).dim == 0
    rep = LinearCode(f2, [[1, 1]])
    drep = galois_dual(rep, 0)
    assert drep.rows == ((1, 1),)


def test_galois_dual_dimension_sum_and_pairing():
    rng = random.Random(23)
    for pe in [(2, 2), (3, 2), (5, 1)]:
        field = make_field(*pe)
        for _ in range(8):
            l, n = rng.randrange(1, 4), rng.randrange(3, 6)
            l = min(l, n)
            C = _random_code(rng, field, l, n)
            for k in range(field.e):
                D = galois_dual(C, k)
                assert C.dim + D.dim == C.n
                for crow in C.generator():
                    for drow in D.generator():
                        assert not galois_inner_product(crow, drow, k)


def test_double_dual_returns_the_code_at_matched_parameter():
    rng = random.Random(31)
    for pe in [(2, 2), (3, 2), (2, 3)]:
        field = make_field(*pe)
        for _ in range(6):
            C = _random_code(rng, field, 2, 5)
            for k in range(field.e):
                kk = (field.e - k) % field.e
                DD = galois_dual(galois_dual(C, k), kk)
                assert linalg.same_row_space(field, DD.codes_matrix(), C.codes_matrix())


def test_is_galois_lcd_examples():
    f8, C = _ex24_code()
    chk = is_galois_lcd(C, 1)
    assert chk.lcd and chk.det == f8.gen
    f2 = make_field(2, 1)
    eye = LinearCode(f2, [[1, 0, 0], [0, 1, 0]])
    assert is_galois_lcd(eye, 0).lcd
    rep = LinearCode(f2, [[1, 1]])
    assert not is_galois_lcd(rep, 0).lcd


def test_is_galois_lcd_agrees_with_intersection_oracle():
    rng = random.Random(1234)
    fields = [make_field(2, 1), make_field(3, 1), make_field(2, 2),
              make_field(5, 1), make_field(7, 1), make_field(3, 2), make_field(2, 3)]
    checked = 0
    while checked < 1000:
        field = rng.choice(fields)
        n = rng.randrange(2, 7)
        l = rng.randrange(1, n + 1)
        C = _random_code(rng, field, l, n)
        k = rng.randrange(field.e)
        assert is_galois_lcd(C, k).lcd == (hull_dim(C, k) == 0)
        checked += 1


def test_hull_oracle_against_literal_enumeration():
    rng = random.Random(77)
    f3 = make_field(3, 1)
    for _ in range(20):
        C = _random_code(rng, f3, 2, 4)
        D = galois_dual(C, 0)
        assert literal_intersection_dim(f3, C, D) == hull_dim(C, 0)


def test_extend_lcd_repetition_codes():
    f2 = make_field(2, 1)
    rep = LinearCode(f2, [[1, 1]])
    ext = extend_lcd(rep, 0, "char2")
    assert ext.rows == ((1, 1, 1),)
    prm = min_distance(ext)
    assert (ext.n, ext.dim, prm.d) == (3, 1, 3)
    assert is_galois_lcd(ext, 0).lcd

    f5 = make_field(5, 1)
    c5 = LinearCode(f5, [[1, 1]])
    ext5 = extend_lcd(c5, 0, "pmod4")
    assert ext5.rows == ((1, 1, 2),)
    assert is_galois_lcd(ext5, 0).lcd


def test_extend_lcd_identity_input():
    f2 = make_field(2, 1)
    eye = LinearCode(f2, [[1, 0], [0, 1]])
    ext = extend_lcd(eye, 0, "char2")
    assert ext.rows == eye.rows and ext.n == 2
    assert is_galois_lcd(ext, 0).lcd


def test_extend_lcd_validation():
    f3 = make_field(3, 1)
    c = LinearCode(f3, [[1, 1]])
    with pytest.raises(ValueError):
        extend_lcd(c, 0, "char2")  # wrong characteristic
    with pytest.raises(ValueError):
        extend_lcd(c, 0, "pmod4")  # 3 = 3 mod 4
    f2 = make_field(2, 1)
    bad = LinearCode(f2, [[0, 1, 1]])
    with pytest.raises(ValueError):
        extend_lcd(bad, 0, "char2")  # not [I | A]
    with pytest.raises(ValueError):
        extend_lcd(LinearCode(f2, [[1, 1]]), 0, "nope")


def test_extend_lcd_gram_is_identity_and_distance_holds():
    rng = random.Random(5150)
    for pe, mode in [((2, 1), "char2"), ((2, 2), "char2"), ((5, 1), "pmod4"), ((13, 1), "pmod4")]:
        field = make_field(*pe)
        if mode == "pmod4":
            eta = sqrt_minus_one(field)
            assert eta * eta == -field.one
        for _ in range(8):
            n = rng.randrange(2, 5)
            l = rng.randrange(1, n + 1)
            a_block = [[field.from_code(rng.randrange(field.q)) for _ in range(n - l)]
                       for _ in range(l)]
            rows = [[field.one if i == j else field.zero for j in range(l)] + a_block[i]
                    for i in range(l)]
            C = LinearCode(field, rows)
            for k in range(field.e):
                ext = extend_lcd(C, k, mode)
                assert ext.n == 2 * n - l and ext.dim == l
                gram = linalg.matmul(
                    field, ext.codes_matrix(),
                    linalg.transpose(linalg.frobenius_matrix(
                        field, ext.codes_matrix(), field.e - k)))
                assert gram == linalg.identity(l)
                assert is_galois_lcd(ext, k).lcd
                assert min_distance(ext).d >= min_distance(C).d


def test_min_distance_identity_and_budget_edges():
    f7 = make_field(7, 1)
    eye = LinearCode(f7, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert min_distance(eye).d == 1
    with pytest.raises(ValueError):
        min_distance(LinearCode(f7, [], n=3))


def test_min_distance_ex24_both_strategies():
    _, C = _ex24_code()
    pm = min_distance(C, "messages")
    ps = min_distance(C, "supports")
    assert pm == ps == CodeParams(4, 2, 3, True)
    assert pm.mds


def test_min_distance_strategies_agree_on_random_corpus():
    rng = random.Random(99)
    cases = [(make_field(2, 1), 3, 7), (make_field(3, 1), 2, 6),
             (make_field(2, 2), 2, 6), (make_field(5, 1), 2, 5),
             (make_field(3, 2), 2, 5), (make_field(11, 1), 2, 4)]
    for field, l, n in cases:
        for _ in range(3):
            C = _random_code(rng, field, l, n)
            dm = min_distance(C, "messages").d
            ds = min_distance(C, "supports").d
            assert dm == ds == brute_min_distance(C)


def test_min_distance_budget_refusal_and_interval():
    f5 = make_field(5, 1)
    rng = random.Random(2)
    C = _random_code(rng, f5, 3, 6)
    with pytest.raises(BudgetExceeded):
        min_distance(C, "messages", budget_messages=10)
    out = min_distance(C, "auto", budget_messages=10, budget_supports=2)
    assert not out.exact
    lo, hi = out.d
    assert 1 <= lo <= hi == C.n - C.dim + 1
    assert not out.mds


def test_supports_partial_scan_reports_a_valid_lower_bound():
    f2 = make_field(2, 1)
    # [7,1,7] repetition: supports needs to reach weight 7
    rep = LinearCode(f2, [[1] * 7])
    out = min_distance(rep, "supports", budget_supports=10)
    assert not out.exact and out.d[0] >= 2
    exact = min_distance(rep, "supports")
    assert exact.d == 7 and exact.mds


def test_code_params_validation():
    with pytest.raises(ValueError):
        CodeParams(4, 2, 4, True)  # violates Singleton
    with pytest.raises(ValueError):
        CodeParams(4, 2, (1, 3), True)  # interval cannot be exact
    prm = CodeParams(4, 2, (1, 3), False)
    assert prm.to_json()["d"] == [1, 3]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 5))
def test_min_distance_messages_equals_brute_force(seed, n):
    rng = random.Random(seed)
    f4 = make_field(2, 2)
    C = _random_code(rng, f4, 2, n)
    assert min_distance(C, "messages").d == brute_min_distance(C)
