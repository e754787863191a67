"""Young diagrams and tableaux.

A tableau is a tuple of rows, each a strictly increasing tuple of distinct
positive integers, with weakly decreasing row lengths and strictly increasing
columns.  Boxes and corners are addressed as 1-based ``(row, column)`` pairs.
Diagrams (partitions) are weakly decreasing tuples of positive integers.

Dominance follows the convention where larger means closer to a single
column: ``dominance_geq(lam, mu)`` holds when every partial sum of ``lam`` is
at most the matching partial sum of ``mu``.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from functools import cache
from itertools import accumulate, zip_longest
from math import factorial, prod
from typing import Iterable, Iterator, Literal, Sequence

from duflo.core_words import DomainError

Tableau = tuple[tuple[int, ...], ...]
Diagram = tuple[int, ...]
Corner = tuple[int, int]

EMPTY: Tableau = ()


# ---------------------------------------------------------------- validation


def is_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """Row-strict, column-strict, weakly decreasing row lengths, distinct positive entries."""
    seen: set[int] = set()
    for r, row in enumerate(rows):
        if not row:
            return False
        if r and len(row) > len(rows[r - 1]):
            return False
        for c, a in enumerate(row):
            if a <= 0 or a in seen:
                return False
            seen.add(a)
            if c and row[c - 1] >= a:
                return False
            if r and rows[r - 1][c] >= a:
                return False
    return True


def as_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    """Validate and freeze nested rows as a tableau."""
    t = tuple(tuple(int(a) for a in row) for row in rows)
    if not is_tableau(t):
        raise DomainError(f"not a Young tableau: {format_tableau(t)}")
    return t


def entries(t: Tableau) -> list[int]:
    return [a for row in t for a in row]


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_standard_tableau(t: Tableau) -> bool:
    return sorted(entries(t)) == list(range(1, size(t) + 1))


def locate(t: Tableau, v: int) -> Corner:
    """The box ``(row, column)`` holding ``v``."""
    for r, row in enumerate(t, start=1):
        k = bisect_left(row, v)
        if k < len(row) and row[k] == v:
            return r, k + 1
    raise DomainError(f"{v} is not an entry of {format_tableau(t)}")


def row_of(t: Tableau, v: int) -> int:
    return locate(t, v)[0]


# ---------------------------------------------------------------- diagrams


def shape(t: Tableau) -> Diagram:
    return tuple(len(row) for row in t)


def dual_partition(lam: Sequence[int]) -> Diagram:
    """``lam*_i`` is the number of parts ``>= i``."""
    return tuple(sum(1 for part in lam if part >= i) for i in range(1, (lam[0] if lam else 0) + 1))


def diagram_corners(lam: Sequence[int]) -> list[Corner]:
    """Corners of a diagram, in increasing row order."""
    return [(i, part) for i, part in enumerate(lam, start=1) if i == len(lam) or lam[i] < part]


def corners(t: Tableau) -> list[Corner]:
    return diagram_corners(shape(t))


def shape_and_corners(t: Tableau) -> tuple[Diagram, list[Corner]]:
    return shape(t), corners(t)


def corner_of_entry(t: Tableau, v: int) -> Corner:
    """The corner whose entry is ``v``."""
    box = locate(t, v)
    if box not in corners(t):
        raise DomainError(f"{v} does not sit in a corner of {format_tableau(t)}")
    return box


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    dual = dual_partition(lam)
    return [[1 + (dual[j - 1] - i) + (part - j) for j in range(1, part + 1)] for i, part in enumerate(lam, start=1)]


def count_standard(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    return factorial(sum(lam)) // prod(h for row in hook_lengths(lam) for h in row)


@cache
def partitions(n: int, largest: int | None = None) -> tuple[Diagram, ...]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if n == 0:
        return ((),)
    top = n if largest is None else min(n, largest)
    return tuple((first,) + rest for first in range(top, 0, -1) for rest in partitions(n - first, first))


def _partial_sums(lam: Sequence[int], width: int) -> list[int]:
    return list(accumulate(list(lam) + [0] * (width - len(lam))))


def dominance_geq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when ``lam`` sits at or above ``mu``: every partial sum of ``lam`` is ``<=`` that of ``mu``."""
    if sum(lam) != sum(mu):
        raise DomainError(f"diagrams of different sizes: {sum(lam)} vs {sum(mu)}")
    width = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(_partial_sums(lam, width), _partial_sums(mu, width)))


def dominance_gt(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return tuple(lam) != tuple(mu) and dominance_geq(lam, mu)


def diagram_descendants(mu: Sequence[int]) -> set[Diagram]:
    """The covers of ``mu``: one box moved down a row, or moved across a staircase."""
    padded = list(mu) + [0] * (len(mu) + 2)
    found: set[Diagram] = set()
    for i in range(len(mu)):
        # one box pushed to the next row
        if padded[i] - padded[i + 1] >= 2:
            lam = padded[:]
            lam[i] -= 1
            lam[i + 1] += 1
            found.add(_strip(lam))
        # a run of rows one shorter, followed by a row two shorter
        k = 0
        while padded[i + k + 1] == padded[i] - 1 > 0:
            k += 1
        if k >= 1 and padded[i + k + 1] == padded[i] - 2:
            lam = padded[:]
            lam[i] -= 1
            lam[i + k + 1] += 1
            found.add(_strip(lam))
    return found


def _strip(parts: Iterable[int]) -> Diagram:
    return tuple(p for p in parts if p > 0)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Diagram:
    """Parse ``4,3,1``, ``4 3 1`` or ``(4,3,1)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = []
    for token in re.split(r"[,\s]+", body.strip()):
        if not token.isdigit() or int(token) == 0:
            raise DomainError(f"bad partition part {token!r} in {text!r}")
        parts.append(int(token))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError(f"partition parts must weakly decrease: {text!r}")
    return tuple(parts)


# ---------------------------------------------------------------- tableau basics


def transpose(t: Tableau) -> Tableau:
    if not t:
        return EMPTY
    return tuple(tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0])))


def column(t: Tableau, j: int) -> tuple[int, ...]:
    """The j-th column, read top to bottom."""
    return tuple(row[j - 1] for row in t if len(row) >= j)


def rows_between(t: Tableau, i: int, j: int | None = None) -> Tableau:
    """The sub-tableau of rows ``i..j`` (1-based, inclusive; ``None`` means to the end)."""
    return t[i - 1 : j]


def columns_between(t: Tableau, i: int, j: int | None = None) -> Tableau:
    """The sub-tableau of columns ``i..j`` (1-based, inclusive; ``None`` means to the end)."""
    stop = j if j is not None else None
    return tuple(r for r in (row[i - 1 : stop] for row in t) if r)


def row_max(t: Tableau, i: int) -> int:
    """Largest entry of row ``i``."""
    return t[i - 1][-1]


def column_max(t: Tableau, j: int) -> int:
    """Largest entry of column ``j``."""
    return column(t, j)[-1]


def row_tableau(n: int) -> Tableau:
    return (tuple(range(1, n + 1)),) if n else EMPTY


def column_tableau(n: int) -> Tableau:
    return tuple((i,) for i in range(1, n + 1))


def is_column(t: Tableau) -> bool:
    return all(len(row) == 1 for row in t)


def standardize_tableau(t: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    """Relabel entries onto ``1..n`` preserving order; also return the sorted alphabet."""
    alphabet = tuple(sorted(entries(t)))
    rank = {a: k for k, a in enumerate(alphabet, start=1)}
    return tuple(tuple(rank[a] for a in row) for row in t), alphabet


def relabel_tableau(t: Tableau, alphabet: Sequence[int]) -> Tableau:
    """Send entry ``k`` to the k-th smallest letter of ``alphabet``."""
    letters = sorted(alphabet)
    return tuple(tuple(letters[a - 1] for a in row) for row in t)


def renumber_tableau(t: Tableau, j: int, direction: Literal["up", "down"] = "up") -> Tableau:
    """Apply the shift of entries at threshold ``j`` to every box."""
    if direction == "up":
        return tuple(tuple(a + 1 if a >= j else a for a in row) for row in t)
    if any(j in row for row in t):
        raise DomainError(f"cannot renumber down at {j}: it is an entry of {format_tableau(t)}")
    return tuple(tuple(a - 1 if a > j else a for a in row) for row in t)


def join_columns(left: Tableau, right: Tableau) -> Tableau:
    """Place ``right``'s columns after ``left``'s, row by row, and sort each row."""
    return tuple(
        tuple(sorted((a or ()) + (b or ())))
        for a, b in zip_longest(left, right)
    )


def standard_tableaux_of_shape(lam: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of shape ``lam``, by placing ``n`` in each corner."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return [EMPTY]
    out = []
    for r, _ in diagram_corners(lam):
        smaller = list(lam)
        smaller[r - 1] -= 1
        for t in standard_tableaux_of_shape(_strip(smaller)):
            rows = [list(row) for row in t]
            if r > len(rows):
                rows.append([])
            rows[r - 1].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return out


@cache
def standard_tableaux(n: int) -> tuple[Tableau, ...]:
    """All standard tableaux with ``n`` boxes, sorted by text serialization."""
    return tuple(sorted((t for lam in partitions(n) for t in standard_tableaux_of_shape(lam)), key=format_tableau))


# ---------------------------------------------------------------- row insertion


def row_bump(row: Sequence[int], j: int) -> tuple[tuple[int, ...], int | None]:
    """Replace the least entry ``>= j`` by ``j``; return the new row and the bumped entry."""
    k = bisect_left(row, j)
    if k == len(row):
        return tuple(row) + (j,), None
    if row[k] == j:
        raise DomainError(f"{j} already present in row {tuple(row)}")
    return tuple(row[:k]) + (j,) + tuple(row[k + 1 :]), row[k]


def insert_with_box(t: Tableau, j: int) -> tuple[Tableau, Corner]:
    """Row insertion of ``j``; also return the box added to the shape."""
    rows = list(t)
    carry: int | None = j
    r = 0
    while carry is not None:
        if r == len(rows):
            rows.append((carry,))
            return tuple(rows), (r + 1, 1)
        rows[r], carry = row_bump(rows[r], carry)
        r += 1
    return tuple(rows), (r, len(rows[r - 1]))


def insert(t: Tableau, j: int) -> tuple[Tableau, int]:
    """Row insertion ``(T <= j)``; returns the new tableau and the entry of the new corner."""
    if any(j in row for row in t):
        raise DomainError(f"{j} is already an entry of {format_tableau(t)}")
    if j <= 0:
        raise DomainError(f"entries must be positive, got {j}")
    new, (r, c) = insert_with_box(t, j)
    return new, new[r - 1][c - 1]


def insert_all(t: Tableau, letters: Iterable[int]) -> Tableau:
    for a in letters:
        t = insert(t, a)[0]
    return t


def row_push_up(row: Sequence[int], j: int) -> tuple[tuple[int, ...], int, int]:
    """Replace the greatest entry ``< j`` by ``j``; return the row, the expelled entry and its column."""
    k = bisect_left(row, j)
    if k == 0:
        raise DomainError(f"cannot push {j} into row {tuple(row)}: no smaller entry")
    if k < len(row) and row[k] == j:
        raise DomainError(f"{j} already present in row {tuple(row)}")
    return tuple(row[: k - 1]) + (j,) + tuple(row[k:]), row[k - 1], k


def _push_up_rows(rows: list[tuple[int, ...]], bottom: int, j: int) -> tuple[int, list[Corner]]:
    """Push ``j`` up through ``rows[0:bottom]`` in place; return the expelled entry and the boxes hit."""
    path = []
    for r in range(bottom - 1, -1, -1):
        rows[r], j, col = row_push_up(rows[r], j)
        path.append((r + 1, col))
    return j, path


def push_up(t: Tableau, j: int) -> tuple[Tableau, int]:
    """``(T ^ j)``: push ``j`` in from the bottom row; return the tableau and the entry expelled from row 1."""
    if not t:
        raise DomainError("cannot push up into an empty tableau")
    if any(j in row for row in t):
        raise DomainError(f"{j} is already an entry of {format_tableau(t)}")
    if j <= t[-1][0]:
        raise DomainError(f"{j} must exceed {t[-1][0]}, the first entry of the last row")
    rows = list(t)
    out, _ = _push_up_rows(rows, len(rows), j)
    return tuple(rows), out


def delete_corner(t: Tableau, c: Corner) -> tuple[Tableau, int, tuple[Corner, ...]]:
    """``(T ^^ c)``: remove the corner entry and push it up through the rows above.

    Returns the new tableau, the expelled entry ``c^T`` and the segment of
    displaced boxes, listed from the corner upward.
    """
    if c not in corners(t):
        raise DomainError(f"{c} is not a corner of {format_tableau(t)}")
    r, _ = c
    rows = list(t)
    j = rows[r - 1][-1]
    rows[r - 1] = rows[r - 1][:-1]
    out, path = _push_up_rows(rows, r - 1, j)
    if not rows[-1]:
        rows.pop()
    return tuple(rows), out, (c, *path)


def delete_entry_at_corner(t: Tableau, v: int) -> tuple[Tableau, int, tuple[Corner, ...]]:
    """:func:`delete_corner` addressed by the corner's entry."""
    return delete_corner(t, corner_of_entry(t, v))


# ---------------------------------------------------------------- column variants


def column_insert(t: Tableau, j: int) -> tuple[Tableau, int]:
    """``(j => T)``, defined by transposing, row inserting and transposing back."""
    new, corner_entry = insert(transpose(t), j)
    return transpose(new), corner_entry


def column_delete(t: Tableau, c: Corner) -> tuple[Tableau, int]:
    """``(T <= c)`` for a corner ``c`` of ``T`` (given in ``T``'s own coordinates)."""
    if c not in corners(t):
        raise DomainError(f"{c} is not a corner of {format_tableau(t)}")
    new, out, _ = delete_corner(transpose(t), (c[1], c[0]))
    return transpose(new), out


# ---------------------------------------------------------------- jeu de taquin


def jdt_remove(t: Tableau, v: int) -> Tableau:
    """Remove ``v`` and slide the hole out to a corner.

    The hole takes the smaller of its right and lower neighbours until it
    has neither.
    """
    r, c = locate(t, v)
    grid = [list(row) for row in t]
    r, c = r - 1, c - 1
    while True:
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[r][c] = right
            c += 1
        else:
            grid[r][c] = below
            r += 1
    del grid[r][c]
    return tuple(tuple(row) for row in grid if row)


def project(t: Tableau, i: int, j: int, order: Literal["ascending", "descending"] = "ascending") -> Tableau:
    """Remove by jeu de taquin every entry outside ``[i, j]``."""
    if i > j:
        raise DomainError(f"empty interval [{i},{j}]")
    outside = sorted((a for a in entries(t) if not i <= a <= j), reverse=(order == "descending"))
    for a in outside:
        t = jdt_remove(t, a)
    return t


def chain_psi(t: Tableau) -> tuple[Diagram, ...]:
    """Shapes of the projections onto ``[1, n], [1, n-1], ..., [1, 1]``."""
    n = size(t)
    return tuple(shape(project(t, 1, m)) for m in range(n, 0, -1))


def chain_psi_inverse(chain: Sequence[Sequence[int]]) -> Tableau:
    """Rebuild a standard tableau from a decreasing chain of diagrams."""
    shapes = [tuple(lam) for lam in reversed(chain)]
    rows: list[list[int]] = []
    previous: Diagram = ()
    for value, lam in enumerate(shapes, start=1):
        if sum(lam) != value or any(a < b for a, b in zip(lam, lam[1:])) or 0 in lam:
            raise DomainError(f"malformed chain at step {value}: {lam}")
        grown = [r for r, (a, b) in enumerate(zip_longest(lam, previous, fillvalue=0)) if a != b]
        if len(grown) != 1 or lam[grown[0]] != (previous[grown[0]] if grown[0] < len(previous) else 0) + 1:
            raise DomainError(f"chain steps {previous} -> {lam} do not differ by one box")
        r = grown[0]
        if r == len(rows):
            rows.append([])
        rows[r].append(value)
        previous = lam
    return tuple(tuple(row) for row in rows)


def tau_tableau(t: Tableau) -> frozenset[int]:
    """Indices ``i`` such that ``i + 1`` sits in a strictly lower row than ``i``."""
    row = {a: r for r, line in enumerate(t) for a in line}
    return frozenset(i for i in range(1, size(t)) if row[i + 1] > row[i])


# ---------------------------------------------------------------- text format


def format_tableau(t: Sequence[Sequence[int]]) -> str:
    return "/".join(" ".join(str(a) for a in row) for row in t)


def parse_tableau(text: str) -> Tableau:
    """Parse ``1 2 5/3 4/6``."""
    rows = []
    for chunk in text.strip().split("/"):
        row = []
        for token in chunk.split():
            if not token.isdigit():
                raise DomainError(f"bad tableau entry {token!r} in {text!r}")
            row.append(int(token))
        rows.append(row)
    if rows == [[]]:
        return EMPTY
    return as_tableau(rows)


def iter_boxes(t: Tableau) -> Iterator[tuple[Corner, int]]:
    for r, row in enumerate(t, start=1):
        for c, a in enumerate(row, start=1):
            yield (r, c), a
