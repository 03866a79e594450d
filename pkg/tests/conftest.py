import pytest

from triacontagonal.amplitudes import amplitudes_cyclotomic, amplitudes_primary
from triacontagonal.roots import e8_roots, h4_roots
from triacontagonal.verify import e8_report, gram_matrix, h4_report


@pytest.fixture(scope="session")
def surd():
    return amplitudes_primary()


@pytest.fixture(scope="session")
def cyc():
    return amplitudes_cyclotomic()


@pytest.fixture(scope="session")
def e8_exact(cyc):
    return e8_roots(cyc)


@pytest.fixture(scope="session")
def e8_numeric(surd):
    return e8_roots(surd)


@pytest.fixture(scope="session")
def h4(surd):
    return h4_roots(surd)


@pytest.fixture(scope="session")
def e8_exact_gram(e8_exact):
    return gram_matrix(e8_exact)


@pytest.fixture(scope="session")
def e8_exact_report(e8_exact, e8_exact_gram):
    return e8_report(e8_exact, gram=e8_exact_gram)


@pytest.fixture(scope="session")
def e8_numeric_report(e8_numeric):
    return e8_report(e8_numeric)


@pytest.fixture(scope="session")
def h4_full_report(h4):
    return h4_report(h4)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for one acceptance criterion."""
    label = request.node.function.__doc__.strip().splitlines()[0]
    outcome = {"ok": False}
    yield outcome
    ACCEPTANCE_LINES.append(f"{'PASS' if outcome['ok'] else 'FAIL'}  {label}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
