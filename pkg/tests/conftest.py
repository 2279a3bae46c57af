import sys

from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, title, elapsed, limit = results[number]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} [{number:2d}] {title} ({elapsed:.2f}s, limit {limit}s)"
        )
