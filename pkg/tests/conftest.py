import pytest

from hashseg.knowledge_base import Kb, KbPage
from hashseg.ngram_lm import UnigramModel
from hashseg.resources import bundled_resources

ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        number, title = marker.args
        details = [str(v) for k, v in report.user_properties if k == "detail"]
        item.config.stash[ACCEPTANCE_KEY][number] = (title, report.passed, details)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed, details = results[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        if details:
            line += "  [" + "; ".join(details) + "]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def res():
    return bundled_resources()


TOY_COUNTS = {"not": 1000, "a": 5000, "con": 100, "nota": 1, "acon": 1, "notacon": 1}


@pytest.fixture
def toy_lm():
    """Toy counts minus "acon" and "notacon", so "notacon" reads as "not a con"."""
    counts = {w: c for w, c in TOY_COUNTS.items() if w not in ("acon", "notacon")}
    return UnigramModel(counts, 10 ** 6)


@pytest.fixture
def toy_lm_whole():
    """The full toy counts, including "acon" and "notacon"."""
    return UnigramModel(dict(TOY_COUNTS), 10 ** 6)


def make_kb(inlinks, mentions=None, total_pages=None):
    """Small KB from ``{page: [sources]}``; sources are added as pages too."""
    ids = set(inlinks)
    for srcs in inlinks.values():
        ids.update(srcs)
    pages = {pid: KbPage(pid, pid.replace("_", " "), frozenset(inlinks.get(pid, ())))
             for pid in sorted(ids)}
    return Kb(pages, mentions or {}, total_pages)
