import os
import random

import hypothesis
import pytest
from hypothesis import strategies as st

from hildenlift.braidcalc import BraidWord

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


def random_braid(rng: random.Random, m: int, length: int) -> BraidWord:
    return BraidWord(m, tuple(rng.randint(1, m - 1) * rng.choice((1, -1)) for _ in range(length)))


def braid_words(m, max_size=12):
    letter = st.tuples(st.integers(1, m - 1), st.sampled_from((1, -1))).map(lambda t: t[0] * t[1])
    return st.lists(letter, max_size=max_size).map(lambda ls: BraidWord(m, tuple(ls)))


def free_letters(rank, max_size=12):
    return st.lists(st.integers(1, rank).flatmap(lambda g: st.sampled_from((g, -g))), max_size=max_size)


@pytest.fixture
def rng():
    return random.Random(20261016)


# -- acceptance summary: one line per criterion ---------------------------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
