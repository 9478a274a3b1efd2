import functools
import sys
import types

import pytest

import kschur

_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def clear_caches() -> None:
    """Drop every memo table in the package so timings start cold."""
    for name, mod in list(sys.modules.items()):
        if not (name == "kschur" or name.startswith("kschur.")) or not isinstance(mod, types.ModuleType):
            continue
        for obj in vars(mod).values():
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()


@pytest.fixture
def cold():
    clear_caches()
    yield


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE[number] = (title, status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status, seconds = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({seconds:.2f} s)")
