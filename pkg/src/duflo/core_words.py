"""Word calculus for permutations and words over finite alphabets.

A word is a tuple of distinct positive integers ``(a_1, ..., a_n)`` with
``a_i = w(i)``.  It is *standard* when its entries are exactly ``1..n``.
Multiplication is right to left: ``w * s_i`` swaps the entries in positions
``i`` and ``i + 1``, while ``s_i * w`` swaps the values ``i`` and ``i + 1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Literal, Sequence

Word = tuple[int, ...]
Root = tuple[int, int]


class DomainError(ValueError):
    """Raised when an operation's precondition on its inputs is violated."""


def as_word(entries: Iterable[int]) -> Word:
    """Validate and freeze a sequence of entries as a word."""
    word = tuple(int(a) for a in entries)
    if any(a <= 0 for a in word):
        raise DomainError(f"word entries must be positive: {list(word)}")
    if len(set(word)) != len(word):
        raise DomainError(f"word entries must be distinct: {list(word)}")
    return word


def is_standard(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Word:
    """The longest element ``[n, n-1, ..., 1]`` of S_n."""
    if n < 1:
        raise DomainError(f"rank must be positive, got {n}")
    return tuple(range(n, 0, -1))


def position(w: Sequence[int], v: int) -> int:
    """1-based position of the entry ``v`` in ``w``."""
    try:
        return w.index(v) + 1
    except ValueError:
        raise DomainError(f"{v} is not an entry of {list(w)}") from None


def apply_right_s(w: Sequence[int], i: int) -> Word:
    """Right multiplication by the simple reflection s_i: swap positions i, i+1."""
    if not 1 <= i < len(w):
        raise DomainError(f"simple reflection index {i} out of range for rank {len(w)}")
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def apply_left_s(i: int, w: Sequence[int]) -> Word:
    """Left multiplication by s_i: swap the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(a, a) for a in w)


def inverse(w: Sequence[int]) -> Word:
    """Inverse of a standard word, by position lookup."""
    out = [0] * len(w)
    for k, a in enumerate(w, start=1):
        out[a - 1] = k
    return tuple(out)


def compose(x: Sequence[int], y: Sequence[int]) -> Word:
    """The product ``x * y`` of standard words: ``(x * y)(k) = x(y(k))``."""
    if len(x) != len(y):
        raise DomainError(f"rank mismatch: {len(x)} vs {len(y)}")
    return tuple(x[a - 1] for a in y)


def inversion_set(w: Sequence[int]) -> frozenset[Root]:
    """Pairs ``(i, j)``, ``i < j``, such that ``j`` appears before ``i`` in ``w``."""
    pos = {a: k for k, a in enumerate(w)}
    return frozenset((i, j) for i, j in combinations(sorted(w), 2) if pos[i] > pos[j])


def length(w: Sequence[int]) -> int:
    return len(inversion_set(w))


def positive_roots(n: int) -> frozenset[Root]:
    return frozenset(combinations(range(1, n + 1), 2))


def complement_roots(w: Sequence[int]) -> frozenset[Root]:
    """Positive roots that are not inversions of ``w``."""
    return positive_roots(len(w)) - inversion_set(w)


def tau_word(w: Sequence[int]) -> frozenset[int]:
    """Indices ``i`` such that ``i + 1`` comes before ``i`` in ``w``."""
    pos = {a: k for k, a in enumerate(w)}
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def ascents(w: Sequence[int]) -> list[int]:
    """Positions ``i`` with ``a_i < a_{i+1}``; exactly the covers ``w < w * s_i``."""
    return [i for i in range(1, len(w)) if w[i - 1] < w[i]]


def duflo_leq_words(y: Sequence[int], w: Sequence[int]) -> bool:
    """Weak order test: the inversion set of ``y`` is contained in that of ``w``."""
    if len(y) != len(w):
        raise DomainError(f"rank mismatch: {len(y)} vs {len(w)}")
    return inversion_set(y) <= inversion_set(w)


def renumber(w: Sequence[int], j: int, direction: Literal["up", "down"] = "up") -> Word:
    """Shift entries ``>= j`` up by one, or (``down``) entries ``> j`` down by one."""
    if direction == "up":
        return tuple(a + 1 if a >= j else a for a in w)
    if direction == "down":
        if j in w:
            raise DomainError(f"cannot renumber down at {j}: it is an entry of {list(w)}")
        return tuple(a - 1 if a > j else a for a in w)
    raise DomainError(f"unknown direction {direction!r}")


def standardize(w: Sequence[int]) -> Word:
    """Order-preserving relabelling of the entries onto ``1..n``."""
    rank = {a: k for k, a in enumerate(sorted(w), start=1)}
    return tuple(rank[a] for a in w)


def relabel(w: Sequence[int], alphabet: Sequence[int]) -> Word:
    """Inverse of :func:`standardize`: send ``k`` to the k-th smallest letter."""
    letters = sorted(alphabet)
    return tuple(letters[a - 1] for a in w)


def reversal(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def delete_entry(w: Sequence[int], m: int) -> Word:
    """The word ``(w - m)`` obtained by erasing the entry ``m``."""
    if m not in w:
        raise DomainError(f"{m} is not an entry of {list(w)}")
    return tuple(a for a in w if a != m)


def restrict(w: Sequence[int], i: int, j: int) -> Word:
    """The factor ``[a_i, ..., a_j]`` of ``w`` (positions, 1-based, inclusive)."""
    if not 1 <= i <= j <= len(w):
        raise DomainError(f"positions [{i},{j}] out of range for rank {len(w)}")
    return tuple(w[i - 1 : j])


def colligation(x: Sequence[int], y: Sequence[int]) -> Word:
    """Concatenation ``[x, y]`` of words on disjoint alphabets."""
    shared = set(x) & set(y)
    if shared:
        raise DomainError(f"colligation needs disjoint alphabets, shared: {sorted(shared)}")
    return tuple(x) + tuple(y)


def range_cycle(i: int, j: int, direction: Literal["<", ">"], n: int) -> Word:
    """Word form of ``s_i s_{i+1} ... s_j`` (``<``) or ``s_i s_{i-1} ... s_j`` (``>``) in S_n.

    Empty ranges give the identity.
    """
    if direction == "<":
        indices = range(i, j + 1) if 1 <= i <= j else range(0)
    elif direction == ">":
        indices = range(i, j - 1, -1) if i >= j >= 1 else range(0)
    else:
        raise DomainError(f"unknown direction {direction!r}")
    w = identity(n)
    for k in indices:
        w = apply_right_s(w, k)
    return w


def decompose_extreme(w: Sequence[int], which: Literal["max", "min"] = "max") -> tuple[Word, Word]:
    """Split off the largest (or smallest) entry of a standard word.

    For ``max`` returns ``(y, cycle)`` with ``y = (w - n)`` in S_{n-1} and
    ``cycle = s_{n-1} s_{n-2} ... s_i`` where ``i`` is the position of ``n``;
    then ``w = y * cycle`` once ``y`` is extended by the fixed point ``n``.
    For ``min`` returns ``y = (w - 1)`` on the alphabet ``2..n`` and
    ``cycle = s_1 ... s_{i-1}`` with ``i`` the position of 1; then
    ``w = [1, y] * cycle``.
    """
    n = len(w)
    if not is_standard(w) or n < 1:
        raise DomainError(f"expected a standard word, got {list(w)}")
    if which == "max":
        i = position(w, n)
        return delete_entry(w, n), range_cycle(n - 1, i, ">", n)
    if which == "min":
        i = position(w, 1)
        return delete_entry(w, 1), range_cycle(1, i - 1, "<", n)
    raise DomainError(f"unknown extreme {which!r}")


def format_word(w: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in w) + "]"


def parse_word(text: str) -> Word:
    """Parse ``[2,5,1,4,3]``; spaces are tolerated."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise DomainError(f"word must be bracketed: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    entries = []
    for token in inner.split(","):
        token = token.strip()
        if not token.isdigit():
            raise DomainError(f"bad word entry {token!r} in {text!r}")
        entries.append(int(token))
    return as_word(entries)
