import time

from acceptance_log import RESULTS

SUITE_BUDGET = 120.0
_start = [0.0]


def pytest_sessionstart(session):
    _start[0] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    elapsed = time.perf_counter() - _start[0]
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title, secs = RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title} ({secs:.2f}s)")
    terminalreporter.write_line(f"suite wall time {elapsed:.1f}s (budget {SUITE_BUDGET:.0f}s)")
