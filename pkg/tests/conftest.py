from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from booleket.exactnum import AmplitudeQ2
from booleket.polyring import Polynomial

GOLDEN_DIR = Path(__file__).parent / "golden"

# name -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False,
                     help="rewrite golden rendering files instead of comparing")


@pytest.fixture
def golden(request):
    update = request.config.getoption("--update-golden")

    def check(name, text):
        path = GOLDEN_DIR / name
        if update:
            path.parent.mkdir(exist_ok=True)
            path.write_text(text, encoding="utf-8")
        assert path.exists(), f"missing golden file {name}; run pytest --update-golden"
        assert text == path.read_text(encoding="utf-8"), f"rendering drifted from {name}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


small_ints = st.integers(min_value=-20, max_value=20)
nonzero_small = small_ints.filter(bool)
rationals = st.builds(Fraction, small_ints, nonzero_small)
nonzero_rationals = rationals.filter(bool)
amplitudes = st.builds(AmplitudeQ2, rationals, rationals, rationals, rationals)


def polynomials(max_degree=12):
    return st.lists(rationals, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree=12):
    return polynomials(max_degree).filter(lambda p: not p.is_zero())
