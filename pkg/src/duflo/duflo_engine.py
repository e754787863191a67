"""Offspring sets and the induced weak order on standard Young tableaux.

An offspring of ``T`` is the insertion tableau of ``y * s_i`` for some word
``y`` of the cell of ``T`` and some ascent ``i`` of ``y``.  Two recursions
compute the offspring set without enumerating the cell: one peels corners
by row deletion, the other by column deletion.  Each combines the
offsprings of the smaller tableaux with a handful of shifted tableaux that
only appear at the top level.
"""

from __future__ import annotations

from collections import deque
from functools import cache
from typing import Callable, Sequence

from duflo.core_words import DomainError, Word, is_standard
from duflo.poset import TableauPoset
from duflo.tableaux import (
    Corner,
    Tableau,
    column,
    column_delete,
    column_insert,
    columns_between,
    corners,
    delete_corner,
    dominance_geq,
    dominance_gt,
    format_tableau,
    insert,
    is_column,
    is_standard_tableau,
    is_tableau,
    join_columns,
    relabel_tableau,
    shape,
    size,
    standard_tableaux,
    standardize_tableau,
)


def _require_standard(t: Tableau) -> None:
    if not is_standard_tableau(t):
        raise DomainError(f"expected a standard tableau: {format_tableau(t)}")


def _on_alphabet(fn: Callable[[Tableau], frozenset[Tableau]], t: Tableau) -> frozenset[Tableau]:
    """Evaluate a standard-tableau function on a tableau over any alphabet."""
    std, alphabet = standardize_tableau(t)
    return frozenset(relabel_tableau(s, alphabet) for s in fn(std))


# ---------------------------------------------------------------- row recursion


def corner_shift(t: Tableau, c: Corner) -> Tableau | None:
    """The extra offspring attached to corner ``c``, or ``None``.

    Defined only when ``c`` expels the largest entry ``w`` of the first row.
    That entry is then inserted into the rows below the first row of
    ``(T ^^ c)``.  The result counts only when it is a tableau of strictly
    larger shape.
    """
    if c not in corners(t):
        raise DomainError(f"{c} is not a corner of {format_tableau(t)}")
    top = t[0][-1]
    if c[0] == 1:
        below = len(t[1]) if len(t) > 1 else 0
        long_enough = len(t[0]) >= below + 2
        one_longer = len(t[0]) == below + 1 and below > 0 and top < t[1][-1]
        if not (long_enough or one_longer):
            return None
        return (t[0][:-1],) + insert(t[1:], top)[0]
    reduced, expelled, _ = delete_corner(t, c)
    if expelled != top:
        return None
    candidate = reduced[:1] + insert(reduced[1:], top)[0]
    if is_tableau(candidate) and dominance_gt(shape(candidate), shape(t)):
        return candidate
    return None


@cache
def _offsprings_rows(t: Tableau) -> frozenset[Tableau]:
    if size(t) <= 1 or is_column(t):
        return frozenset({t})
    found = set()
    for c in corners(t):
        reduced, p, _ = delete_corner(t, c)
        for s in _on_alphabet(_offsprings_rows, reduced):
            found.add(insert(s, p)[0])
        shifted = corner_shift(t, c)
        if shifted is not None:
            found.add(shifted)
    return frozenset(found)


def offsprings_recursive(t: Tableau) -> frozenset[Tableau]:
    """Offspring set by row-corner recursion."""
    _require_standard(t)
    return _offsprings_rows(t)


# ---------------------------------------------------------------- column recursion


def dual_corner_shift(t: Tableau, c: Corner) -> Tableau | None:
    """The extra offspring attached to corner ``c`` in the column recursion, or ``None``.

    Column-delete ``c`` from the columns right of the first, expelling
    ``d``.  If ``d`` exceeds the whole first column it is appended there;
    if it falls between the last two first-column entries it is column
    inserted.  The result counts only when its shape is strictly larger.
    """
    if c not in corners(t):
        raise DomainError(f"{c} is not a corner of {format_tableau(t)}")
    if c == (len(t), 1):
        return None
    first = column(t, 1)
    rest = columns_between(t, 2)
    reduced, d = column_delete(rest, (c[0], c[1] - 1))
    last = first[-1]
    before_last = first[-2] if len(first) > 1 else 0
    if d > last:
        candidate = join_columns(tuple((a,) for a in first + (d,)), reduced)
    elif before_last < d < last:
        candidate = column_insert(join_columns(tuple((a,) for a in first), reduced), d)[0]
    else:
        return None
    if is_tableau(candidate) and dominance_gt(shape(candidate), shape(t)):
        return candidate
    return None


@cache
def _offsprings_cols(t: Tableau) -> frozenset[Tableau]:
    if size(t) <= 1 or is_column(t):
        return frozenset({t})
    found = set()
    for c in corners(t):
        reduced, q = column_delete(t, c)
        for s in _on_alphabet(_offsprings_cols, reduced):
            found.add(column_insert(s, q)[0])
        shifted = dual_corner_shift(t, c)
        if shifted is not None:
            found.add(shifted)
    return frozenset(found)


def offsprings_dual(t: Tableau) -> frozenset[Tableau]:
    """Offspring set by column-corner recursion."""
    _require_standard(t)
    return _offsprings_cols(t)


def offsprings(t: Tableau) -> frozenset[Tableau]:
    """Offspring set of a tableau over any alphabet."""
    return _on_alphabet(_offsprings_rows, t)


# ---------------------------------------------------------------- the order


@cache
def induced_order(n: int) -> TableauPoset:
    """Reflexive-transitive closure of the offspring relation on standard tableaux of size ``n``."""
    if n < 1:
        raise DomainError(f"size must be positive, got {n}")
    nodes = standard_tableaux(n)
    relation = {(t, s) for t in nodes for s in _offsprings_rows(t)}
    return TableauPoset.from_relation(n, nodes, relation)


def duflo_leq(t: Tableau, s: Tableau) -> bool:
    """``T <= S`` in the induced order."""
    _require_standard(t)
    _require_standard(s)
    if size(t) != size(s):
        raise DomainError(f"tableaux of different sizes: {size(t)} vs {size(s)}")
    return induced_order(size(t)).leq(t, s)


def duflo_descendants(t: Tableau) -> set[Tableau]:
    """Covers of ``T``: tableaux strictly above with nothing in between."""
    _require_standard(t)
    return induced_order(size(t)).covers_of(t)


def shape_witness(t: Tableau, target: Sequence[int]) -> Tableau:
    """A tableau of shape ``target`` above ``T`` in the induced order.

    Searches the offspring closure of ``T`` through shapes lying between
    ``sh(T)`` and ``target``; returns the least hit in text order.
    """
    _require_standard(t)
    target = tuple(target)
    start = shape(t)
    if sum(target) != size(t) or not dominance_geq(target, start):
        raise DomainError(f"target {target} does not lie above {start}")
    seen = {t}
    queue = deque([t])
    hits = []
    while queue:
        u = queue.popleft()
        if shape(u) == target:
            hits.append(u)
            continue
        for s in _offsprings_rows(u):
            if s not in seen and dominance_geq(target, shape(s)):
                seen.add(s)
                queue.append(s)
    if not hits:
        raise RuntimeError(f"no tableau of shape {target} above {format_tableau(t)}")
    return min(hits, key=format_tableau)


def project_word(w: Sequence[int], i: int, j: int) -> Word:
    """The subword of entries lying in ``[i, j]``."""
    if not is_standard(w):
        raise DomainError(f"expected a standard word, got {list(w)}")
    if not 1 <= i <= j <= len(w):
        raise DomainError(f"interval [{i},{j}] out of range for rank {len(w)}")
    return tuple(a for a in w if i <= a <= j)


__all__ = [
    "corner_shift",
    "dual_corner_shift",
    "duflo_descendants",
    "duflo_leq",
    "induced_order",
    "offsprings",
    "offsprings_dual",
    "offsprings_recursive",
    "project_word",
    "shape_witness",
]
