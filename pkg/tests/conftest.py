from hypothesis import strategies as st

from spechtgram.partitions import Partition


@st.composite
def partitions(draw, max_n=20, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    remaining, cap = n, n
    while remaining:
        p = draw(st.integers(min_value=1, max_value=min(remaining, cap)))
        parts.append(p)
        remaining -= p
        cap = p
    return Partition(tuple(parts))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
