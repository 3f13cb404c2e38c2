import hypothesis.strategies as st
from hypothesis import settings

from orbicover.permcore import Permutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def perms(draw, degree=None, max_degree=8):
    d = degree if degree is not None else draw(st.integers(1, max_degree))
    return Permutation(draw(st.permutations(range(d))))


@st.composite
def perm_pairs(draw, max_degree=8):
    d = draw(st.integers(1, max_degree))
    return draw(perms(d)), draw(perms(d))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
