import itertools

import pytest
from oracle import oracle_congruent

from qminor.laurent import ONE, QINV, neg_q_power, q_power
from qminor.manin import congruent
from qminor.minors import (
    MinorSpec,
    antipode_image,
    col_minor,
    inversion_length,
    minor_tensor,
    minors_of_size,
    parse_minor,
    parse_product,
    row_minor,
    sort_minor,
)
from qminor.tensor import Tensor, parse_word


def T(text, c=ONE):
    return Tensor.from_word(parse_word(text), c)


def test_row_minor_examples():
    assert row_minor((1, 2), (2, 4)) == T("a12.a24") - T("a14.a22", QINV)
    assert row_minor((3, 4), (1, 3)) == T("a31.a43") - T("a33.a41", QINV)
    assert row_minor((2,), (3,)) == T("a23")


def test_col_minor_examples():
    assert col_minor((1, 2), (2, 4)) == T("a12.a24") - T("a22.a14", QINV)
    assert col_minor((3, 4), (1, 3)) == T("a31.a43") - T("a41.a33", QINV)
    assert col_minor((2,), (3,)) == T("a23")


def test_bad_specs():
    with pytest.raises(ValueError):
        row_minor((1, 2), (1,))
    with pytest.raises(ValueError):
        row_minor((1, 1), (1, 2))
    with pytest.raises(ValueError):
        MinorSpec((1,), (2,), "diagonal")


def test_inversion_length():
    assert inversion_length((1, 2, 3)) == 0
    assert inversion_length((2, 1)) == 1
    assert inversion_length((4, 3, 2, 1)) == 6
    with pytest.raises(ValueError):
        inversion_length((1, 1))


def test_sort_minor():
    assert sort_minor(MinorSpec((1, 2), (3, 4))) == (ONE, MinorSpec((1, 2), (3, 4)))
    c, m = sort_minor(MinorSpec((1, 2), (4, 3)))
    assert c == -QINV and m == MinorSpec((1, 2), (3, 4))
    c, m = sort_minor(MinorSpec((2, 1), (4, 3)))
    assert c == q_power(-2) and m == MinorSpec((1, 2), (3, 4))


def test_sort_minor_by_oracle():
    # reordered rows in a row expansion, reordered columns in a column expansion
    assert oracle_congruent(row_minor((2, 1), (3, 4)), row_minor((1, 2), (3, 4)).scale(-QINV))
    assert oracle_congruent(col_minor((1, 2), (4, 3)), col_minor((1, 2), (3, 4)).scale(-QINV))
    assert oracle_congruent(minor_tensor((2, 1), (4, 3)), row_minor((1, 2), (3, 4)).scale(q_power(-2)))


def test_adjacent_swap_scaling():
    for n in (2, 3, 4):
        for r in range(2, n + 1):
            for I in itertools.combinations(range(1, n + 1), r):
                for J in itertools.combinations(range(1, n + 1), r):
                    for p in range(r - 1):
                        Js = J[:p] + (J[p + 1], J[p]) + J[p + 2:]
                        Is = I[:p] + (I[p + 1], I[p]) + I[p + 2:]
                        base = row_minor(I, J)
                        assert congruent(col_minor(I, Js), base.scale(neg_q_power(-1)))
                        assert congruent(row_minor(Is, J), base.scale(neg_q_power(-1)))


def test_row_and_column_minors_agree():
    for n in (1, 2, 3, 4):
        for r in range(1, n + 1):
            for m in minors_of_size(n, r):
                assert congruent(row_minor(m.rows, m.cols), col_minor(m.rows, m.cols))


def test_row_and_column_minors_agree_by_oracle():
    for m in minors_of_size(3, 2):
        assert oracle_congruent(row_minor(m.rows, m.cols), col_minor(m.rows, m.cols))


def test_antipode_image():
    assert antipode_image(MinorSpec((1,), (1,)), 2) == (ONE, MinorSpec((2,), (2,)))
    c, m = antipode_image(MinorSpec((3, 4, 5), (1, 3, 4)), 5)
    assert c == q_power(-4) and m == MinorSpec((1, 2), (2, 5))
    c, m = antipode_image(MinorSpec((1, 2, 3), (1, 2, 5)), 5)
    assert m == MinorSpec((4, 5), (3, 4)) and c == neg_q_power(2)
    with pytest.raises(ValueError):
        antipode_image(MinorSpec((1, 2), (1, 2)), 2)
    with pytest.raises(ValueError):
        antipode_image(MinorSpec((2, 1), (1, 2)), 3)


def test_antipode_twice():
    # applying the map twice returns the original minor with coefficient 1
    for n in (2, 3, 4):
        for r in (1, 2):
            if r >= n:
                continue
            for m in minors_of_size(n, r):
                c1, m1 = antipode_image(m, n)
                if m1.size >= n:
                    continue
                c2, m2 = antipode_image(m1, n)
                assert m2 == m
                assert c1 * c2 == ONE


def test_text_forms():
    m = parse_minor("[3 4|1 3]")
    assert m == MinorSpec((3, 4), (1, 3))
    assert str(m) == "[3 4|1 3]"
    assert m.to_latex() == "[34,13]"
    assert parse_minor("[34|13]") == m
    assert parse_minor("[10 11|1 2]").rows == (10, 11)
    assert parse_product("[3 4|1 3][1 2|2 4]") == [m, MinorSpec((1, 2), (2, 4))]
    with pytest.raises(ValueError):
        parse_minor("[3 4|1]")
    with pytest.raises(ValueError):
        parse_product("[1|1] junk")


def test_lexicographic_order():
    a, b = MinorSpec((3, 4), (1, 3)), MinorSpec((1, 2), (2, 4))
    assert b.key < a.key
    assert sorted([a, b]) == [b, a]
