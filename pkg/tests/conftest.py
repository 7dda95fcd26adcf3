import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One visible verdict line per acceptance criterion, capture or not."""
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None) if mod else None
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num, verdict, label in sorted(verdicts):
        terminalreporter.write_line(f"[criterion {num:02d}] {verdict} - {label}")
