"""Collects the per-criterion PASS/FAIL lines emitted by test_acceptance
and replays them after the run, outside pytest's output capture."""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)
