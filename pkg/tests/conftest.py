import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # acceptance tests accumulate one line per criterion; show them even
    # when output capture is on
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
