from itertools import permutations

from hypothesis import strategies as st

from duflo.tableaux import parse_tableau, relabel_tableau, standard_tableaux

P = parse_tableau


def words(n):
    return list(permutations(range(1, n + 1)))


def gapped(t):
    """Relabel a standard tableau onto even letters, leaving odd gaps for insertions."""
    return relabel_tableau(t, [2 * k for k in range(1, sum(map(len, t)) + 1)])


@st.composite
def standard_words(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def standard_tableau(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.sampled_from(standard_tableaux(n)))


@st.composite
def alphabet_tableau(draw, min_n=1, max_n=6):
    t = draw(standard_tableau(min_n=min_n, max_n=max_n))
    n = sum(map(len, t))
    letters = draw(st.lists(st.integers(min_value=1, max_value=30), min_size=n, max_size=n, unique=True))
    return relabel_tableau(t, letters)


ACCEPTANCE: list[tuple[int, str, bool, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k, title, passed, seconds in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {k}: {title} ({seconds:.2f}s)")
