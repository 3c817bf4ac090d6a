import random

import pytest

from edgewiener.benzenoid import random_benzenoid
from edgewiener.verify import benzenoid_corpus, partial_cube_corpus

_CRITERIA: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): an acceptance criterion, reported in the summary")


@pytest.fixture(scope="session")
def pc_corpus():
    """Trees (500, n <= 60), even cycles C_4..C_40, Q_1..Q_6 and a few stars."""
    return list(partial_cube_corpus(seed=20240601, trees=500, max_tree_n=60))


@pytest.fixture(scope="session")
def bz_corpus():
    """50 random benzenoids up to 12 hexagons, half catacondensed."""
    return list(benzenoid_corpus(samples=50, max_hexes=12, seed=11))


@pytest.fixture(scope="session")
def cata_corpus():
    """50 random catacondensed benzenoids with 1..12 hexagons."""
    rng = random.Random(77)
    out = []
    for i in range(50):
        h, s = rng.randint(1, 12), rng.randrange(1 << 30)
        out.append((f"cata#{i}(h={h},seed={s})", random_benzenoid(h, s, catacondensed=True)))
    return out


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    failed_early = report.when == "setup" and not report.passed
    if report.when == "call" or failed_early:
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _CRITERIA.append((marker.args[0], "PASS" if report.passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in _CRITERIA:
        terminalreporter.write_line(f"{status}  {name}" + (f"  ({detail})" if detail else ""))
