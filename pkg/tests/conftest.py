import sys


def pytest_terminal_summary(terminalreporter):
    # the acceptance suite records one line per criterion; show them after the run
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
