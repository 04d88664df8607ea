import pytest
from hypothesis import given, settings, strategies as st

from lrkron import (
    GelfandPattern, LRFilling, Partition, PatternError, TableauError, WeylTableau,
    check_betweenness, count_patterns, dimension, enumerate_patterns, gelfand_from_weyl,
    is_lattice_word, is_semistandard, lr_fillings, partitions, weyl_from_gelfand,
)

import oracles


@st.composite
def weyl_tableaux(draw, max_n=5, max_boxes=10):
    n = draw(st.integers(1, max_n))
    size = draw(st.integers(0, max_boxes))
    shapes = list(partitions(size, n))
    shape = draw(st.sampled_from(shapes))
    cols = [sum(1 for r in shape.rows if r > j) for j in range(shape.row(0))]
    rows = []
    for i, length in enumerate(shape.rows):
        row = []
        for j in range(length):
            lo = max(row[-1] if row else 1, rows[i - 1][j] + 1 if i else 1)
            hi = n - (cols[j] - 1 - i)
            row.append(draw(st.integers(lo, hi)))
        rows.append(tuple(row))
    return WeylTableau(shape, tuple(rows)), n


def test_weyl_tableau_validation():
    WeylTableau(Partition(2, 1), ((1, 2), (2,)))
    with pytest.raises(TableauError):
        WeylTableau(Partition(2, 1), ((2, 1), (3,)))
    with pytest.raises(TableauError):
        WeylTableau(Partition(2, 1), ((1, 2), (1,)))
    with pytest.raises(TableauError):
        WeylTableau(Partition(2, 1), ((1, 2),))


@pytest.mark.parametrize("shape, rows, n, expected", [
    ((1,), ((1,),), 2, ((1, 0), (1,))),
    ((2,), ((1, 2),), 2, ((2, 0), (1,))),
    ((2, 1), ((1, 2), (2,)), 3, ((2, 1, 0), (2, 1), (1,))),
])
def test_gelfand_from_weyl_examples(shape, rows, n, expected):
    w = WeylTableau(Partition(shape), rows)
    g = gelfand_from_weyl(w, n)
    assert g.rows == expected
    assert weyl_from_gelfand(g) == w


def test_gelfand_from_weyl_symbol_too_large():
    with pytest.raises(TableauError):
        gelfand_from_weyl(WeylTableau(Partition(1), ((3,),)), 2)


@given(weyl_tableaux())
@settings(max_examples=200)
def test_weyl_gelfand_round_trip(case):
    w, n = case
    g = gelfand_from_weyl(w, n)
    assert check_betweenness(g)
    assert g.top == w.shape
    assert weyl_from_gelfand(g) == w


@pytest.mark.parametrize("rows, ok", [
    (((2, 1, 0), (2, 1), (1,)), True),
    (((2, 1, 0), (2, 2), (2,)), False),
    (((1, 0), (1,)), True),
    (((1, 0), (2,)), False),
])
def test_check_betweenness(rows, ok):
    assert check_betweenness(GelfandPattern(rows)) is ok


def test_malformed_triangle():
    with pytest.raises(PatternError):
        GelfandPattern(((2, 1, 0), (2,), (1,)))


def test_weyl_from_gelfand_rejects_invalid():
    with pytest.raises(PatternError):
        weyl_from_gelfand(GelfandPattern(((2, 1, 0), (2, 2), (2,))))


@pytest.mark.parametrize("top, n, expected", [
    (Partition(1), 2, 2), (Partition(2, 1), 3, 8), (Partition(), 4, 1),
])
def test_enumerate_patterns_examples(top, n, expected):
    pats = list(enumerate_patterns(top, n))
    assert len(pats) == expected
    assert all(check_betweenness(g) for g in pats)
    flat = [tuple(x for r in g.rows for x in r) for g in pats]
    assert flat == sorted(set(flat))


def test_all_zero_pattern():
    (g,) = enumerate_patterns(Partition(), 3)
    assert g.rows == ((0, 0, 0), (0, 0), (0,))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pattern_count_equals_dimension(n):
    for size in range(9):
        for p in partitions(size, n):
            count = sum(1 for _ in enumerate_patterns(p, n))
            assert count == dimension(p, n) == count_patterns(p, n)


def test_pattern_json_round_trip():
    g = GelfandPattern(((2, 1, 0), (2, 1), (1,)))
    assert g.to_json() == [[2, 1, 0], [2, 1], [1]]
    assert GelfandPattern.from_json(g.to_json()) == g
    w = weyl_from_gelfand(g)
    assert w.to_json() == {"shape": [2, 1], "rows": [[1, 2], [2]]}
    assert WeylTableau.from_json(w.to_json()) == w


def test_lattice_word_examples():
    ok = LRFilling(Partition(1), Partition(2, 1), ((1,), (1,)))
    assert ok.reading_word() == [1, 1]
    assert is_lattice_word(ok)
    bad = LRFilling(Partition(), Partition(1, 1), ((2,), (1,)))
    assert not is_lattice_word(bad)


def test_reading_order_is_right_to_left():
    f = LRFilling(Partition(), Partition(2), ((1, 2),))
    assert f.reading_word() == [2, 1]
    assert not is_lattice_word(f)


def test_weyl_valid_but_not_lattice():
    # a semistandard skew filling that the Littlewood rule rejects
    f = LRFilling(Partition(1), Partition(2, 1), ((1,), (2,)))
    assert f.is_weyl_valid()
    assert f.reading_word() == [1, 2]
    assert is_lattice_word(f)
    g = LRFilling(Partition(1), Partition(2, 1), ((2,), (1,)))
    assert g.is_weyl_valid()
    assert not is_lattice_word(g)


@pytest.mark.parametrize("lam, mu, n", [
    ((2, 1), (2, 1), 3), ((3, 1), (2, 2), 4), ((2,), (2, 1, 1), 4), ((1, 1), (3, 2), 5),
])
def test_lr_fillings_are_weyl_and_lattice(lam, mu, n):
    for f in lr_fillings(Partition(lam), Partition(mu), n):
        assert f.is_weyl_valid()
        assert is_lattice_word(f)
        assert f.content == tuple(mu)


def test_semistandard_offsets():
    assert is_semistandard([(1, 1), (1,)], [1, 0])
    assert not is_semistandard([(1, 1), (1,)], [0, 0])


def test_semistandard_oracle_agrees_with_dimension():
    for shape in [(2,), (1, 1), (2, 1), (3, 1)]:
        assert oracles.count_semistandard(shape, 3) == dimension(Partition(shape), 3)
