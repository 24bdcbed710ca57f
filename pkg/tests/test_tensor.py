import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from worked import S_TERMS, T_TERMS, from_terms

from qminor.laurent import ONE, Q, QINV, LaurentPoly
from qminor.minors import col_minor, row_minor
from qminor.tensor import (
    Tensor,
    column_action,
    is_in_column_order,
    is_in_row_order,
    parse_word,
    row_action,
    tensor_add,
    tensor_mul,
    word,
    word_str,
)


def T(text, c=ONE):
    return Tensor.from_word(parse_word(text), c)


def test_word_text():
    w = word(31, 43, 12, 24)
    assert w == ((3, 1), (4, 3), (1, 2), (2, 4))
    assert word_str(w) == "a31.a43.a12.a24"
    assert parse_word("a31.a43.a12.a24") == w
    assert word_str(((10, 2),)) == "a10,2"
    assert parse_word("a10,2") == ((10, 2),)


def test_add():
    t = T("a11.a22") + T("a21.a12", Q)
    assert tensor_add(t, Tensor()) == t
    assert tensor_add(t, t.scale(-1)) == Tensor()
    assert tensor_add(T("a11.a22"), T("a11.a22", Q)) == T("a11.a22", ONE + Q)


def test_mul_concatenates():
    assert tensor_mul(T("a11"), T("a22")) == T("a11.a22")
    assert tensor_mul(Tensor.one(), T("a11")) == T("a11")


def test_products_of_minors_match_the_worked_tensors():
    s = tensor_mul(row_minor((3, 4), (1, 3)), row_minor((1, 2), (2, 4)))
    t = tensor_mul(col_minor((3, 4), (1, 3)), col_minor((1, 2), (2, 4)))
    assert s == from_terms(S_TERMS)
    assert t == from_terms(T_TERMS)


def test_row_and_column_order():
    s = from_terms(S_TERMS)
    t = from_terms(T_TERMS)
    assert is_in_row_order(s, (3, 4))
    assert not is_in_row_order(s, (1, 2))
    assert is_in_row_order(Tensor(), (1,))
    assert is_in_column_order(t, (1, 3))


def test_actions_examples():
    theta = Tensor.from_word(tuple(zip((3, 4, 1, 2), (1, 2, 3, 4))))
    got = row_action((1, 3, 2, 4), theta)
    assert got == Tensor.from_word(tuple(zip((2, 4, 1, 3), (1, 2, 3, 4))))
    x = T("a31.a43.a12.a24")
    assert column_action((1, 3, 2, 4), x) == T("a31.a42.a13.a24")
    assert row_action((1, 2, 3, 4), x) == x
    assert column_action({2: 3, 3: 2}, x) == T("a31.a42.a13.a24")


def test_action_rejects_wrong_length():
    with pytest.raises(ValueError):
        row_action((2, 1, 3), T("a11.a22"))
    with pytest.raises(ValueError):
        row_action((1, 1), T("a11.a22"))


def test_text_form_is_deterministic():
    t = T("a21.a12", -QINV) + T("a11.a22") + T("a12.a21", LaurentPoly({0: 2}))
    assert str(t) == "a11.a22 + (2)*a12.a21 + (-q^-1)*a21.a12"


def _random_tensor(rng, n0, k=3):
    terms = {}
    for _ in range(k):
        w = tuple((rng.randint(1, n0), rng.randint(1, n0)) for _ in range(n0))
        terms[w] = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
    return Tensor(terms)


perms = st.integers(1, 4).flatmap(lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1))))


@settings(max_examples=200, deadline=None)
@given(perms, st.integers(0, 10**6))
def test_actions_are_group_actions_and_commute(pair, seed):
    s, t = pair
    n0 = len(s)
    x = _random_tensor(random.Random(seed), n0)
    st_ = tuple(s[t[i] - 1] for i in range(n0))  # s after t
    assert row_action(st_, x) == row_action(s, row_action(t, x))
    assert column_action(st_, x) == column_action(s, column_action(t, x))
    assert row_action(s, column_action(t, x)) == column_action(t, row_action(s, x))
    y = _random_tensor(random.Random(seed + 1), n0)
    assert row_action(s, x + y) == row_action(s, x) + row_action(s, y)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_mul_associative(seed):
    rng = random.Random(seed)
    a, b, c = (_random_tensor(rng, rng.randint(1, 3), 2) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
