"""Staircase labelling against the four frozen example grids, and the
type D double-counting rules against direct ideal enumeration."""

import pytest

from conftest import cached_masks, cached_system
from nilideal.formulas import d_equal_column_count, d_subdiagram_count
from nilideal.ideals import stats_table
from nilideal.paths import count_paths_closed
from nilideal.staircase import (
    Diagram,
    SubDiagram,
    column_length,
    d_tables,
    diagram_stats,
    enumerate_subdiagrams,
    equal_middle_columns,
    prefix_simple_count,
    rootset,
)

# The example grids, one coefficient tuple per box, rows top to bottom.
A4_GRID = [
    [(1, 1, 1, 1), (1, 1, 1, 0), (1, 1, 0, 0), (1, 0, 0, 0)],
    [(0, 1, 1, 1), (0, 1, 1, 0), (0, 1, 0, 0)],
    [(0, 0, 1, 1), (0, 0, 1, 0)],
    [(0, 0, 0, 1)],
]

C3_GRID = [
    [(2, 2, 1), (1, 2, 1), (1, 1, 1), (1, 1, 0), (1, 0, 0)],
    [(0, 2, 1), (0, 1, 1), (0, 1, 0)],
    [(0, 0, 1)],
]

B3_GRID = [
    [(1, 2, 2), (1, 1, 2), (1, 1, 1), (1, 1, 0), (1, 0, 0)],
    [(0, 1, 2), (0, 1, 1), (0, 1, 0)],
    [(0, 0, 1)],
]

D4_GRID = [
    [(1, 2, 1, 1), (1, 1, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0), (1, 1, 0, 0), (1, 0, 0, 0)],
    [(0, 1, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0), (0, 1, 0, 0)],
    [(0, 0, 0, 1), (0, 0, 1, 0)],
]


def grid_of(diagram):
    out = []
    for i in range(1, diagram.n_rows + 1):
        out.append([diagram.rs.roots[diagram.label(i, j)] for j in diagram.row_columns(i)])
    return out


@pytest.mark.parametrize("letter,rank,grid", [
    ("A", 4, A4_GRID), ("C", 3, C3_GRID), ("B", 3, B3_GRID), ("D", 4, D4_GRID),
])
def test_printed_example_grids(letter, rank, grid):
    assert grid_of(Diagram(cached_system(letter, rank))) == grid


def test_row_shapes():
    assert Diagram(cached_system("A", 4)).rows == ((1, 4), (1, 3), (1, 2), (1, 1))
    assert Diagram(cached_system("B", 3)).rows == ((1, 5), (2, 3), (3, 1))
    assert Diagram(cached_system("D", 4)).rows == ((1, 6), (2, 4), (3, 2))


@pytest.mark.parametrize("letter,lo,hi", [("A", 1, 8), ("B", 2, 8), ("C", 2, 8), ("D", 3, 8)])
def test_labeling_invariants_hold_up_to_rank_8(letter, lo, hi):
    # Diagram.__init__ validates bijectivity, ordering and simple placement
    for n in range(lo, hi + 1):
        Diagram(cached_system(letter, n))


def test_exceptional_types_rejected():
    with pytest.raises(ValueError, match="no staircase diagram"):
        Diagram(cached_system("G", 2))


def test_subdiagram_counts():
    assert sum(1 for _ in enumerate_subdiagrams(Diagram(cached_system("B", 2)))) == 6
    assert sum(1 for _ in enumerate_subdiagrams(Diagram(cached_system("D", 3)))) == 10
    assert sum(1 for _ in enumerate_subdiagrams(Diagram(cached_system("A", 2)))) == 5


def test_subdiagram_validation():
    dg = Diagram(cached_system("B", 2))
    SubDiagram(dg, (2, 1))
    with pytest.raises(ValueError, match="column closure"):
        SubDiagram(dg, (1, 1))
    with pytest.raises(ValueError, match="exceeds length"):
        SubDiagram(dg, (4, 0))
    with pytest.raises(ValueError, match="rows"):
        SubDiagram(dg, (1,))
    dga = Diagram(cached_system("A", 3))
    with pytest.raises(ValueError, match="column closure"):
        SubDiagram(dga, (1, 2, 0))


def test_rootset_examples():
    b2 = Diagram(cached_system("B", 2))
    assert rootset(SubDiagram(b2, (0, 0))).mask == 0
    picked = rootset(SubDiagram(b2, (2, 1)))
    assert set(picked.roots) == {(1, 2), (1, 1), (0, 1)}

    d4 = Diagram(cached_system("D", 4))
    sub = SubDiagram(d4, (3, 0, 0))
    assert set(rootset(sub).roots) == {(1, 2, 1, 1), (1, 1, 1, 1), (1, 1, 0, 1)}
    assert set(rootset(sub, swapped=True).roots) == {(1, 2, 1, 1), (1, 1, 1, 1), (1, 1, 1, 0)}


def test_swapped_reading_requires_type_d():
    b2 = Diagram(cached_system("B", 2))
    with pytest.raises(ValueError, match="type D"):
        rootset(SubDiagram(b2, (0, 0)), swapped=True)


def test_equal_middle_columns_examples():
    d3 = Diagram(cached_system("D", 3))
    assert equal_middle_columns(SubDiagram(d3, (0, 0)))
    assert not equal_middle_columns(SubDiagram(d3, (2, 0)))
    assert equal_middle_columns(SubDiagram(d3, (3, 0)))
    assert column_length(SubDiagram(d3, (2, 0)), 2) == 1
    with pytest.raises(ValueError, match="type D"):
        equal_middle_columns(SubDiagram(Diagram(cached_system("B", 2)), (0, 0)))


@pytest.mark.parametrize("letter,rank", [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("D", 5)])
def test_prefix_simple_count_agrees_with_ideal(letter, rank):
    dg = Diagram(cached_system(letter, rank))
    for sub in enumerate_subdiagrams(dg):
        assert prefix_simple_count(sub) == rootset(sub).simple_count()
        if letter == "D":
            assert prefix_simple_count(sub, swapped=True) == rootset(sub, swapped=True).simple_count()


@pytest.mark.parametrize("letter,rank", [("A", 1), ("A", 4), ("B", 2), ("B", 4),
                                         ("C", 3), ("C", 5), ("D", 3), ("D", 5)])
def test_diagram_stats_match_ideal_enumeration(letter, rank):
    rs = cached_system(letter, rank)
    table = diagram_stats(Diagram(rs))
    assert table.counts == stats_table(rs, cached_masks(letter, rank)).counts


@pytest.mark.parametrize("letter,rank", [("A", 3), ("B", 3), ("C", 3)])
def test_abc_rootset_is_bijective(letter, rank):
    rs = cached_system(letter, rank)
    seen = {rootset(sub).mask for sub in enumerate_subdiagrams(Diagram(rs))}
    assert seen == set(cached_masks(letter, rank))


def test_d3_double_count():
    rs = cached_system("D", 3)
    tabs = d_tables(Diagram(rs))
    assert tabs.subdiagram_total == 10
    assert tabs.equal_total == 6
    assert 2 * tabs.subdiagram_total - tabs.equal_total == 14 == len(cached_masks("D", 3))
    assert tabs.unswapped.counts == (4, 3, 2, 1)
    assert tabs.equal_columns.counts == (3, 1, 1, 1)
    assert tabs.combined().counts == (5, 5, 3, 1)
    assert tabs.combined().counts == stats_table(rs, cached_masks("D", 3)).counts


@pytest.mark.parametrize("rank", range(3, 7))
def test_d_intermediate_formulas(rank):
    tabs = d_tables(Diagram(cached_system("D", rank)))
    for j in range(rank + 1):
        assert tabs.unswapped.counts[j] == d_subdiagram_count(rank, j), j
        assert tabs.equal_columns.counts[j] == d_equal_column_count(rank, j), j


@pytest.mark.parametrize("rank", range(3, 7))
def test_d_every_ideal_from_some_reading(rank):
    rs = cached_system("D", rank)
    dg = Diagram(rs)
    plain, flipped, both = set(), set(), set()
    for sub in enumerate_subdiagrams(dg):
        a = rootset(sub).mask
        b = rootset(sub, swapped=True).mask
        plain.add(a)
        flipped.add(b)
        same = a == b
        assert same == equal_middle_columns(sub)
        if same:
            both.add(a)
    assert plain | flipped == set(cached_masks("D", rank))
    assert plain & flipped == both


@pytest.mark.parametrize("rank", range(3, 7))
def test_d_alpha_n_marker_counts_paths_ending_at_height_one(rank):
    rs = cached_system("D", rank)
    dg = Diagram(rs)
    alpha_n = rs.simple_indices[rank - 1]
    containing = sum(1 for sub in enumerate_subdiagrams(dg) if alpha_n in rootset(sub))
    by_paths = sum(count_paths_closed(2 * rank - 1, 1, j) for j in range(2 * rank))
    assert containing == by_paths


def test_render_smoke():
    dg = Diagram(cached_system("D", 3))
    text = dg.render(SubDiagram(dg, (2, 0)))
    assert "*a1+a2+a3" in text and "a2" in text
