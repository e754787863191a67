"""Robinson-Schensted correspondence and cells of the symmetric group.

The cell of a standard tableau ``T`` is the set of words whose insertion
tableau is ``T``.  Cells are enumerated either by filtering S_n or by the
row-corner recursion: every word of the cell ends in some ``p = c^T`` for a
corner ``c``, and deleting that last letter leaves a word of the cell of
``(T ^^ c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations
from typing import Literal, NamedTuple, Sequence

from duflo.core_words import DomainError, Word, as_word, is_standard, relabel, renumber
from duflo.tableaux import (
    EMPTY,
    Tableau,
    chain_psi_inverse,
    column,
    column_delete,
    corners,
    count_standard,
    delete_corner,
    format_tableau,
    insert,
    insert_with_box,
    is_standard_tableau,
    shape,
    size,
    standardize_tableau,
)


class RSPair(NamedTuple):
    insertion: Tableau
    recording: Tableau


@dataclass(frozen=True)
class Cell:
    tableau: Tableau
    members: frozenset[Word]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members


class CellPart(NamedTuple):
    """One block of a cell decomposition: the split-off letter and the standardized subtableau."""

    letter: int
    subtableau: Tableau


def rs_trace(w: Sequence[int]) -> list[Tableau]:
    """The prefix insertion tableaux of ``w``, one per letter."""
    trace = []
    t: Tableau = EMPTY
    for a in as_word(w):
        t = insert(t, a)[0]
        trace.append(t)
    return trace


def rs_tableau(w: Sequence[int]) -> Tableau:
    """Insertion tableau ``T(w)`` (any word, standard or not)."""
    t: Tableau = EMPTY
    for a in w:
        t = insert_with_box(t, a)[0]
    return t


def recording_tableau(w: Sequence[int]) -> Tableau:
    """``Q(w)``: the standard tableau whose projection chain is the prefix shape trace."""
    if not w:
        return EMPTY
    shapes = [shape(t) for t in rs_trace(w)]
    return chain_psi_inverse(tuple(reversed(shapes)))


def rs_pair(w: Sequence[int]) -> RSPair:
    if not is_standard(w):
        raise DomainError(f"expected a standard word, got {list(w)}")
    return RSPair(rs_tableau(w), recording_tableau(w))


def rs_inverse(pair: tuple[Tableau, Tableau]) -> Word:
    """Recover ``w`` from ``(T(w), Q(w))`` by deleting corners in decreasing order of Q."""
    t, q = pair
    if shape(t) != shape(q):
        raise DomainError(f"shape mismatch: {shape(t)} vs {shape(q)}")
    if not (is_standard_tableau(t) and is_standard_tableau(q)):
        raise DomainError("rs_inverse needs two standard tableaux")
    letters = []
    q_rows = [list(row) for row in q]
    for m in range(size(q), 0, -1):
        r = next(i for i, row in enumerate(q_rows) if row and row[-1] == m)
        q_rows[r].pop()
        t, out, _ = delete_corner(t, (r + 1, len(t[r])))
        letters.append(out)
    return tuple(reversed(letters))


# ---------------------------------------------------------------- cells


@cache
def _cell_standard(t: Tableau) -> frozenset[Word]:
    n = size(t)
    if n <= 1:
        return frozenset({tuple(a for row in t for a in row)})
    words = set()
    for p, sub in decompose_cell_rows(t):
        for y in _cell_standard(sub):
            words.add(renumber(y, p, "up") + (p,))
    return frozenset(words)


def _cell_filter(t: Tableau) -> frozenset[Word]:
    n = size(t)
    return frozenset(w for w in permutations(range(1, n + 1)) if rs_tableau(w) == t)


def cell(t: Tableau, method: Literal["engine", "filter"] = "engine") -> Cell:
    """All words with insertion tableau ``t``; tableaux on other alphabets are handled by relabelling."""
    std, alphabet = standardize_tableau(t)
    members = _cell_standard(std) if method == "engine" else _cell_filter(std)
    if std != t:
        members = frozenset(relabel(w, alphabet) for w in members)
    return Cell(t, members)


def cell_size(t: Tableau) -> int:
    """Number of words in the cell: the hook length count for the shape."""
    return count_standard(shape(t))


def canonical_words(t: Tableau) -> tuple[Word, Word]:
    """Rows read bottom to top, and columns each read bottom to top, left to right."""
    by_rows = tuple(a for row in reversed(t) for a in row)
    width = len(t[0]) if t else 0
    by_columns = tuple(a for j in range(1, width + 1) for a in reversed(column(t, j)))
    return by_rows, by_columns


def decompose_cell_rows(t: Tableau) -> list[CellPart]:
    """One part per corner ``c``: letter ``p = c^T`` and ``(T ^^ c)`` renumbered onto ``1..n-1``.

    The cell is the disjoint union over parts of ``[phi_p(y), p]`` for ``y``
    in the cell of the subtableau.
    """
    if not is_standard_tableau(t) or size(t) < 2:
        raise DomainError(f"expected a standard tableau with at least 2 boxes: {format_tableau(t)}")
    parts = []
    for c in corners(t):
        sub, p, _ = delete_corner(t, c)
        parts.append(CellPart(p, tuple(tuple(a - 1 if a > p else a for a in row) for row in sub)))
    return parts


def decompose_cell_cols(t: Tableau) -> list[CellPart]:
    """One part per corner ``c``: letter ``q`` expelled by column deletion and ``(T <= c)`` renumbered.

    The cell is the disjoint union over parts of ``[q, phi_q(y)]`` for ``y``
    in the cell of the subtableau.
    """
    if not is_standard_tableau(t) or size(t) < 2:
        raise DomainError(f"expected a standard tableau with at least 2 boxes: {format_tableau(t)}")
    parts = []
    for c in corners(t):
        sub, q = column_delete(t, c)
        parts.append(CellPart(q, tuple(tuple(a - 1 if a > q else a for a in row) for row in sub)))
    return parts


def expand_rows_part(part: CellPart) -> frozenset[Word]:
    return frozenset(renumber(y, part.letter, "up") + (part.letter,) for y in cell(part.subtableau).members)


def expand_cols_part(part: CellPart) -> frozenset[Word]:
    return frozenset((part.letter,) + renumber(y, part.letter, "up") for y in cell(part.subtableau).members)

