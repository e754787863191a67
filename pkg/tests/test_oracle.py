import math

import pytest

from conftest import P
from duflo.core_words import identity, length, longest_element
from duflo.duflo_engine import induced_order
from duflo.oracle import (
    all_words,
    cells_by_filter,
    induced_order_bruteforce,
    offsprings_bruteforce,
    tableaux_by_filter,
    weak_covers,
    weak_reach,
)
from duflo.rs_cells import cell_size
from duflo.tableaux import column_tableau, row_tableau, standard_tableaux


def test_weak_covers_rank_three():
    edges = weak_covers(3)
    assert len(edges) == 6
    assert {v for w, v in edges if w == identity(3)} == {(2, 1, 3), (1, 3, 2)}
    assert not any(w == longest_element(3) for w, _ in edges)
    assert all(length(v) == length(w) + 1 for w, v in edges)


@pytest.mark.parametrize("n", range(1, 6))
def test_weak_cover_count(n):
    # every word has n - 1 neighbours, half of the incidences go up
    assert len(weak_covers(n)) == math.factorial(n) * (n - 1) // 2


def test_weak_reach_extremes():
    assert weak_reach(4, identity(4)) == set(all_words(4))
    assert weak_reach(4, longest_element(4)) == {longest_element(4)}


@pytest.mark.parametrize("n", range(1, 7))
def test_cells_by_filter_sizes(n):
    cells = cells_by_filter(n)
    assert sorted(cells) == sorted(standard_tableaux(n))
    assert all(len(ws) == cell_size(t) for t, ws in cells.items())
    assert tableaux_by_filter(n) == list(standard_tableaux(n))


def test_offsprings_bruteforce_conventions():
    assert offsprings_bruteforce(column_tableau(4)) == {column_tableau(4)}
    assert row_tableau(4) in offsprings_bruteforce(row_tableau(4))
    assert offsprings_bruteforce(P("1 2/3")) == {P("1 2/3"), P("1/2/3")}


@pytest.mark.parametrize("n", range(2, 6))
def test_order_equals_bruteforce(n):
    fast, slow = induced_order(n), induced_order_bruteforce(n)
    assert fast.reach == slow.reach
    assert fast.covers == slow.covers


def test_rank_three_order_is_a_diamond():
    poset = induced_order_bruteforce(3)
    bottom, top = row_tableau(3), column_tableau(3)
    middle = {P("1 2/3"), P("1 3/2")}
    assert poset.covers == {(bottom, m) for m in middle} | {(m, top) for m in middle}
