import pytest
from hypothesis import given

from conftest import P, standard_tableau, standard_words, words
from duflo.core_words import (
    DomainError,
    compose,
    delete_entry,
    identity,
    inverse,
    longest_element,
    range_cycle,
    renumber,
    reversal,
    tau_word,
)
from duflo.rs_cells import (
    canonical_words,
    cell,
    cell_size,
    decompose_cell_cols,
    decompose_cell_rows,
    expand_cols_part,
    expand_rows_part,
    recording_tableau,
    rs_inverse,
    rs_pair,
    rs_tableau,
    rs_trace,
)
from duflo.tableaux import (
    column_tableau,
    format_tableau,
    insert,
    jdt_remove,
    renumber_tableau,
    row_tableau,
    shape,
    standard_tableaux,
    tau_tableau,
    transpose,
)


def _recording_by_boxes(w):
    # the usual shortcut: write k into the box created by the k-th insertion
    q = {}
    t = ()
    for k, a in enumerate(w, start=1):
        before = shape(t)
        t = insert(t, a)[0]
        after = shape(t)
        r = next(i for i in range(len(after)) if i >= len(before) or after[i] > before[i])
        q.setdefault(r, []).append(k)
    return tuple(tuple(q[r]) for r in sorted(q))


def test_rs_trace_example():
    trace = [format_tableau(t) for t in rs_trace((2, 5, 1, 4, 3))]
    assert trace == ["2", "2 5", "1 5/2", "1 4/2 5", "1 3/2 4/5"]


def test_rs_tableau_examples():
    assert rs_tableau((2, 5, 1, 4, 3)) == P("1 3/2 4/5")
    assert rs_tableau(identity(6)) == row_tableau(6)
    assert rs_tableau((6, 3, 4, 1, 2, 5)) == P("1 2 5/3 4/6")


def test_rs_pair_examples():
    assert rs_pair(identity(4)) == (row_tableau(4), row_tableau(4))
    w = (2, 5, 1, 4, 3)
    t, q = rs_pair(w)
    assert rs_pair(inverse(w)) == (q, t)
    with pytest.raises(DomainError):
        rs_inverse((P("1 2"), P("1/2")))


def test_rs_inverse_roundtrip_s4():
    seen = {rs_pair(w) for w in words(4)}
    assert len(seen) == 24
    assert all(rs_inverse(rs_pair(w)) == w for w in words(4))


@given(standard_words())
def test_recording_tableau_matches_box_shortcut(w):
    assert recording_tableau(w) == _recording_by_boxes(w)


@pytest.mark.parametrize("n", range(1, 8))
def test_rs_bijection_and_inverse_symmetry(n):
    seen = set()
    for w in words(n):
        t, q = rs_pair(w)
        assert shape(t) == shape(q)
        assert rs_inverse((t, q)) == w
        assert rs_pair(inverse(w)) == (q, t)
        seen.add((t, q))
    assert len(seen) == len(words(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_transpose_duality(n):
    for w in words(n):
        assert transpose(rs_tableau(w)) == rs_tableau(reversal(w))


@pytest.mark.parametrize("n", range(2, 8))
def test_deletion_of_extreme_entries(n):
    for w in words(n):
        t = rs_tableau(w)
        assert rs_tableau(delete_entry(w, n)) == jdt_remove(t, n)
        assert rs_tableau(delete_entry(w, 1)) == jdt_remove(t, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_insertion_under_range_cycle(n):
    # T(s_i ... s_n * y) = (phi_i(T(y)) <= i) for y in S_n, embedded in S_{n+1}
    for y in words(n):
        t = rs_tableau(y)
        for i in range(1, n + 2):
            w = compose(range_cycle(i, n, "<", n + 1), y + (n + 1,))
            assert rs_tableau(w) == insert(renumber_tableau(t, i), i)[0]


@given(standard_words())
def test_tau_word_equals_tau_tableau(w):
    assert tau_word(w) == tau_tableau(rs_tableau(w))


# ------------------------------------------------------------------ cells


def test_cell_examples():
    assert cell(P("1 2 5/3 4")).members == {
        (3, 1, 4, 2, 5), (3, 4, 1, 2, 5), (3, 1, 4, 5, 2), (3, 4, 1, 5, 2), (3, 4, 5, 1, 2),
    }
    assert cell(row_tableau(5)).members == {identity(5)}
    assert cell(P("1 4/2 5/3")).members == {
        (3, 2, 1, 5, 4), (3, 2, 5, 1, 4), (3, 5, 2, 1, 4), (3, 2, 5, 4, 1), (3, 5, 2, 4, 1),
    }


def test_cell_of_alphabet_tableau():
    members = cell(P("2 4/7")).members
    assert members == {(2, 7, 4), (7, 2, 4)}
    assert all(rs_tableau(w) == P("2 4/7") for w in members)


@pytest.mark.parametrize("n", range(1, 8))
def test_cell_engine_matches_filter_and_hooks(n):
    total = 0
    for t in standard_tableaux(n):
        members = cell(t).members
        assert len(members) == cell_size(t)
        if n <= 6:
            assert members == cell(t, "filter").members
        else:
            assert all(rs_tableau(w) == t for w in members)
        total += len(members)
    assert total == len(words(n))


def test_cell_size_examples():
    assert cell_size(P("1 2 5/3 4")) == 5
    assert cell_size(row_tableau(6)) == 1
    assert cell_size(P("1 2/3 4")) == 2
    assert cell_size(P("1 2 3/4")) == 3


def test_canonical_words_examples():
    assert canonical_words(P("1 2 5/3 4/6")) == ((6, 3, 4, 1, 2, 5), (6, 3, 1, 4, 2, 5))
    assert canonical_words(row_tableau(4)) == (identity(4), identity(4))
    assert canonical_words(column_tableau(4)) == (longest_element(4), longest_element(4))


@given(standard_tableau())
def test_canonical_words_lie_in_cell(t):
    w_r, w_c = canonical_words(t)
    assert rs_tableau(w_r) == rs_tableau(w_c) == t


def test_decompose_rows_example():
    parts = decompose_cell_rows(P("1 2 5/3 4/6"))
    assert [(p, format_tableau(s)) for p, s in parts] == [
        (5, "1 2/3 4/5"),
        (2, "1 3 4/2/5"),
        (2, "1 3 4/2 5"),
    ]
    # the multipliers s_p ... s_5 in S_6 act as [y, 6] -> [phi_p(y), p]
    for p, s in parts:
        for y in cell(s).members:
            assert compose(range_cycle(p, 5, "<", 6), y + (6,)) == renumber(y, p) + (p,)


def test_decompose_rows_single_row():
    assert decompose_cell_rows(row_tableau(4)) == [(4, row_tableau(3))]


def test_decompose_cols_examples():
    assert decompose_cell_cols(column_tableau(4)) == [(4, column_tableau(3))]
    parts = decompose_cell_cols(P("1 2/3"))
    assert parts == [(1, P("1/2")), (3, P("1 2"))]
    assert expand_cols_part(parts[0]) == {(1, 3, 2)}
    assert expand_cols_part(parts[1]) == {(3, 1, 2)}
    # the multiplier s_{q-1} ... s_1 acting on [1, y + 1] places q in front
    for q, s in parts:
        for y in cell(s).members:
            shifted = (1,) + tuple(a + 1 for a in y)
            assert compose(range_cycle(q - 1, 1, ">", 3), shifted) == (q,) + renumber(y, q)


@pytest.mark.parametrize("n", range(2, 7))
def test_decompositions_reassemble_cells(n):
    for t in standard_tableaux(n):
        target = cell(t, "filter").members
        for blocks in (
            [expand_rows_part(p) for p in decompose_cell_rows(t)],
            [expand_cols_part(p) for p in decompose_cell_cols(t)],
        ):
            assert sum(map(len, blocks)) == len(target)
            assert frozenset().union(*blocks) == target
