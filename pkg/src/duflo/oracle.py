"""Brute-force ground truth over the whole symmetric group.

Nothing here calls the recursive offspring constructions; everything is
derived from enumerating words, ascent steps and insertion tableaux.
"""

from __future__ import annotations

from collections import defaultdict, deque
from functools import cache
from itertools import permutations
from typing import Iterator

from duflo.core_words import Word, apply_right_s, ascents
from duflo.poset import TableauPoset
from duflo.rs_cells import rs_tableau
from duflo.tableaux import Tableau, column_tableau, format_tableau, row_tableau, size


def all_words(n: int) -> Iterator[Word]:
    """S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def weak_covers(n: int) -> set[tuple[Word, Word]]:
    """All edges ``w -> w * s_i`` that raise the length by one."""
    return {(w, apply_right_s(w, i)) for w in all_words(n) for i in ascents(w)}


def weak_reach(n: int, start: Word) -> set[Word]:
    """Every word above ``start`` along cover edges (breadth-first)."""
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in ascents(w):
            v = apply_right_s(w, i)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


@cache
def cells_by_filter(n: int) -> dict[Tableau, frozenset[Word]]:
    """Partition S_n by insertion tableau."""
    groups: dict[Tableau, set[Word]] = defaultdict(set)
    for w in all_words(n):
        groups[rs_tableau(w)].add(w)
    return {t: frozenset(ws) for t, ws in groups.items()}


def tableaux_by_filter(n: int) -> list[Tableau]:
    return sorted(cells_by_filter(n), key=format_tableau)


def offsprings_bruteforce(t: Tableau) -> set[Tableau]:
    """Tableaux reached from the cell of ``t`` by a single ascent ``y -> y * s_i``.

    The row tableau is counted as its own offspring and the column tableau
    has only itself.
    """
    n = size(t)
    if t == column_tableau(n):
        return {t}
    found = {rs_tableau(apply_right_s(y, i)) for y in cells_by_filter(n)[t] for i in ascents(y)}
    if t == row_tableau(n):
        found.add(t)
    return found


def induced_order_bruteforce(n: int) -> TableauPoset:
    """Tableau order from chains that alternate cell membership and weak-order covers."""
    cells = cells_by_filter(n)
    relation = set()
    for t, members in cells.items():
        reached_cells = {t}
        seen = set(members)
        queue = deque(members)
        while queue:
            w = queue.popleft()
            for i in ascents(w):
                v = apply_right_s(w, i)
                if v in seen:
                    continue
                target = rs_tableau(v)
                reached_cells.add(target)
                for u in cells[target]:
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
        relation.update((t, s) for s in reached_cells)
    poset = TableauPoset.from_relation(n, cells, relation)
    if poset.reach != frozenset(relation):
        raise AssertionError("chain reach is not transitively closed")
    return poset
