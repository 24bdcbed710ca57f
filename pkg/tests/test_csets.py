from collections import Counter

from qminor.csets import IndexPair, csets_column, csets_rowcol, phi_subset, psi_subset


def cols(level):
    return Counter((p.cols, p.cols_c) for p in level)


def signed(level):
    return Counter((p.sign, p.rows, p.cols, p.rows_c, p.cols_c) for p in level)


def test_zero_tower():
    f = csets_column((3, 4), 4)
    assert f.levels == {0: [IndexPair(cols=(3, 4), cols_c=(1, 2))]}
    g = csets_rowcol((1, 2), (3, 4), 4, 4)
    assert g.levels == {0: [IndexPair((1, 2), (3, 4), (3, 4), (1, 2), 1)]}


def test_worked_column_table():
    f = csets_column((1, 2), 4, r=2)
    assert cols(f.level(0)) == Counter({((1, 2), (3, 4)): 1})
    assert cols(f.level(1)) == Counter(
        {((1, 3), (2, 4)): 1, ((3, 2), (1, 4)): 1, ((1, 4), (3, 2)): 1, ((4, 2), (3, 1)): 1}
    )
    assert cols(f.level(2)) == Counter({((4, 3), (2, 1)): 1, ((3, 4), (1, 2)): 1})
    assert f.level(3) == []
    assert f.max_level() == 2


def test_worked_column_table_pruning():
    f = csets_column((1, 2), 4)
    phase, sigma, _, pruned = f.history[-1]
    assert sigma == (2, 3)
    assert cols(pruned[2]) == Counter({((1, 4), (2, 3)): 1, ((2, 3), (1, 4)): 1})
    assert cols(pruned[3]) == Counter({((2, 4), (1, 3)): 1})
    # stage three levels, before the last transposition
    stage3 = f.history[-2][2]
    assert cols(phi_subset(stage3[1], 2)) == Counter({((1, 4), (2, 3)): 1, ((2, 3), (1, 4)): 1})
    assert cols(phi_subset(stage3[2], 2)) == Counter({((2, 4), (1, 3)): 1})
    # at stage three the pair (34)(21) is the one removed from level two
    assert cols(f.history[-2][3][2]) == Counter({((3, 4), (2, 1)): 1})


def test_small_column_table():
    f = csets_column((1,), (1, 2))
    assert cols(f.level(0)) == Counter({((1,), (2,)): 1})
    assert cols(f.level(1)) == Counter({((2,), (1,)): 1})


def test_worked_signed_table():
    f = csets_rowcol((1, 4), (2, 4), 4, 4)
    want = {
        0: [(1, (1, 4), (2, 4), (2, 3), (1, 3))],
        1: [
            (1, (1, 3), (2, 4), (2, 4), (1, 3)),
            (1, (1, 2), (2, 4), (4, 3), (1, 3)),
            (-1, (1, 4), (3, 4), (2, 3), (1, 2)),
        ],
        2: [
            (1, (1, 2), (2, 4), (3, 4), (1, 3)),
            (-1, (1, 3), (3, 4), (2, 4), (1, 2)),
            (-1, (1, 2), (3, 4), (4, 3), (1, 2)),
        ],
        3: [(-1, (1, 2), (3, 4), (3, 4), (1, 2))],
    }
    for i, entries in want.items():
        assert signed(f.level(i)) == Counter(entries), i
    labels = [p.label() for p in f.level(3)]
    assert labels == ["-(12,34)(34,12)"]


def test_psi_keeps_carried_entry():
    f = csets_rowcol((1, 4), (2, 4), 4, 4)
    before = f.history[-2][2]  # after the first row step
    assert psi_subset(before[2], 3) == []
    assert f.history[-1][1] == (3, 4)
    assert signed(f.level(3)) == Counter({(-1, (1, 2), (3, 4), (3, 4), (1, 2)): 1})


def test_subsets_trivial_cases():
    p = IndexPair(rows=(1,), rows_c=(2,), cols=(1,), cols_c=(2,))
    assert phi_subset([p], 1) == [p]
    assert psi_subset([p], 1) == []
    r = IndexPair(rows=(2,), rows_c=(1,), cols=(2,), cols_c=(1,))
    assert phi_subset([r], 1) == []
    assert psi_subset([r], 1) == [r]


def test_column_phase_matches_unsigned_recursion():
    for J in [(1, 2), (1, 3), (2, 3), (1,), (2,)]:
        unsigned = csets_column(J, 4 if len(J) == 2 else 3)
        amb = 4 if len(J) == 2 else 3
        signed_f = csets_rowcol((), J, (), amb)
        for i in range(unsigned.max_level() + 1):
            assert cols(unsigned.level(i)) == cols(signed_f.level(i))
            assert all(p.sign == (-1) ** i for p in signed_f.level(i) if i)


def test_pairs_partition_the_ambient():
    f = csets_rowcol((1, 3), (1, 2), (1, 2, 3, 4), (1, 2, 3, 4))
    for _, p in f:
        assert sorted(p.row_concat()) == [1, 2, 3, 4]
        assert sorted(p.col_concat()) == [1, 2, 3, 4]
