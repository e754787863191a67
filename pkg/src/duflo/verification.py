"""Named exhaustive checks over S_n and standard tableaux of size n."""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterator, Literal, NamedTuple

from duflo.core_words import inverse, reversal
from duflo.duflo_engine import induced_order, offsprings_dual, offsprings_recursive
from duflo.oracle import cells_by_filter, induced_order_bruteforce, offsprings_bruteforce
from duflo.rs_cells import (
    cell,
    cell_size,
    decompose_cell_cols,
    decompose_cell_rows,
    expand_cols_part,
    expand_rows_part,
    rs_inverse,
    rs_pair,
    rs_tableau,
)
from duflo.tableaux import corners, delete_corner, insert, project, standard_tableaux, transpose


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _rs_bijection(n: int) -> bool:
    pairs = set()
    for w in permutations(range(1, n + 1)):
        pair = rs_pair(w)
        if rs_inverse(pair) != w or rs_pair(inverse(w)) != (pair.recording, pair.insertion):
            return False
        pairs.add(pair)
    # onto: every same-shape pair is hit
    return len(pairs) == sum(cell_size(t) for t in standard_tableaux(n))


def _rs_transpose(n: int) -> bool:
    return all(transpose(rs_tableau(w)) == rs_tableau(reversal(w)) for w in permutations(range(1, n + 1)))


def _cells(n: int) -> bool:
    groups = cells_by_filter(n)
    return set(groups) == set(standard_tableaux(n)) and all(
        cell(t).members == groups[t] and len(groups[t]) == cell_size(t) for t in standard_tableaux(n)
    )


def _decompositions(n: int) -> bool:
    if n < 2:
        return True
    for t in standard_tableaux(n):
        target = cell(t).members
        for parts, expand in ((decompose_cell_rows(t), expand_rows_part), (decompose_cell_cols(t), expand_cols_part)):
            blocks = [expand(p) for p in parts]
            if sum(map(len, blocks)) != len(target) or frozenset().union(*blocks) != target:
                return False
    return True


def _roundtrips(n: int) -> bool:
    for t in standard_tableaux(n):
        for c in corners(t):
            reduced, out, _ = delete_corner(t, c)
            if insert(reduced, out)[0] != t:
                return False
    return True


def _three_way(n: int) -> bool:
    return all(
        offsprings_recursive(t) == offsprings_dual(t) == offsprings_bruteforce(t) for t in standard_tableaux(n)
    )


def _order(n: int) -> bool:
    return induced_order(n).reach == induced_order_bruteforce(n).reach


def _order_transpose(n: int) -> bool:
    poset = induced_order(n)
    return all(((transpose(b), transpose(a)) in poset.reach) for a, b in poset.reach)


def _projections(n: int) -> bool:
    return all(
        project(t, i, j, "ascending") == project(t, i, j, "descending")
        for t in standard_tableaux(n)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
    )


FAST: list[tuple[str, Callable[[int], bool]]] = [
    ("rs bijection and inverse symmetry", _rs_bijection),
    ("transpose of insertion equals insertion of reversal", _rs_transpose),
    ("cells by recursion equal cells by filtering, sizes by hook lengths", _cells),
    ("row and column cell decompositions", _decompositions),
    ("corner deletion then insertion roundtrip", _roundtrips),
    ("offsprings: row recursion = column recursion = brute force", _three_way),
]

FULL: list[tuple[str, Callable[[int], bool]]] = FAST + [
    ("induced order equals chain-definition order", _order),
    ("induced order reverses under transpose", _order_transpose),
    ("projection independent of elimination order", _projections),
]


def run_suite(n: int, suite: Literal["fast", "full"] = "fast") -> Iterator[CheckResult]:
    checks = FAST if suite == "fast" else FULL
    for name, check in checks:
        yield CheckResult(name, check(n), f"n={n}")
