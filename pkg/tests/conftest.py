import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from montesinos.system import KnotSpec

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def tangles(max_den: int = 9, lo: int = -1, hi: int = 1):
    """Non-integral fractions strictly between lo and hi."""
    return (
        st.integers(2, max_den)
        .flatmap(lambda q: st.tuples(st.integers(lo * q + 1, hi * q - 1), st.just(q)))
        .map(lambda pq: Fraction(*pq))
        .filter(lambda f: f.denominator > 1)
    )


def knots(n: int = 3, max_den: int = 7):
    return st.lists(tangles(max_den), min_size=n, max_size=n).map(lambda ts: KnotSpec(tuple(ts)))


F = Fraction


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
