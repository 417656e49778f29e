import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small = st.integers(-4, 4)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def points(d, min_size=None, max_size=9, coord=small):
    return st.lists(st.tuples(*[coord] * d).map(lambda v: tuple(Fraction(x) for x in v)),
                    min_size=d + 1 if min_size is None else min_size, max_size=max_size)


# -- acceptance bookkeeping: one summary line per criterion --------------------------

ACCEPTANCE = {}


def record_acceptance(number, status, detail):
    ACCEPTANCE[number] = (status, detail)
    print(f"criterion {number:>2}: {status:<12} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status:<12} {detail}")
