import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ncdegree.fields import GF, QQ
from ncdegree.freealg import NcPoly
from ncdegree.words import group_reduce

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    def log(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" -- {detail}" if detail else "")
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


fields = st.sampled_from(FIELDS)


def monoid_words(nvars=2, max_len=4, min_len=0):
    return st.lists(st.integers(0, nvars - 1), min_size=min_len, max_size=max_len).map(tuple)


def group_words(nvars=3, max_len=8):
    letter = st.tuples(st.integers(0, nvars - 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(group_reduce)


@st.composite
def polys(draw, field=None, nvars=2, max_terms=4, max_len=3):
    F = field if field is not None else draw(fields)
    terms = draw(st.dictionaries(monoid_words(nvars, max_len), st.integers(-6, 6), max_size=max_terms))
    return NcPoly(terms, nvars, F)


@st.composite
def poly_triples(draw, nvars=2, max_terms=3, max_len=3):
    F = draw(fields)
    return tuple(draw(polys(F, nvars, max_terms, max_len)) for _ in range(3))
