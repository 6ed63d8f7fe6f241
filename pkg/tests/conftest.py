from fractions import Fraction

from hypothesis import strategies as st

from jmclass.arith import Poly
from jmclass.partitions import Partition

ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    left = n
    while left:
        p = draw(st.integers(min_value=1, max_value=left))
        parts.append(p)
        left -= p
    return Partition.from_parts(parts)


rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))


@st.composite
def polys(draw, max_deg=3):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)), rationals, max_size=4))
    return Poly(terms)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
