import pytest

from class3dessins.collect import group_of, validate_params
from class3dessins.oracle import from_collection

# smallest valid parameters of each family
SMALLEST = {
    "I": ("I", 5, 1, 1, 1),
    "II": ("II", 3, 2, 1, 1),
    "III": ("III", 2, 2, 1, 1),
    "IV": ("IV", 2, 3, 1, 1),
    "V": ("V", 2, 3, 2, 1),
    "VI": ("VI", 2, 3, 2, 1),
}

_cayley_cache = {}


def params_of(name):
    return validate_params(*SMALLEST[name])


def cayley(params):
    if params not in _cayley_cache:
        _cayley_cache[params] = from_collection(params)
    return _cayley_cache[params]


@pytest.fixture(params=list(SMALLEST), ids=list(SMALLEST))
def smallest(request):
    return params_of(request.param)


@pytest.fixture(params=["III", "IV", "V", "VI"])
def small2(request):
    """The 2-group families, whose smallest members have at most 256 elements."""
    return params_of(request.param)


@pytest.fixture
def g5():
    return group_of(params_of("I"))


@pytest.fixture
def g128():
    return group_of(params_of("III"))


# acceptance results, echoed at the end of every run
CRITERIA: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}"
    CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
