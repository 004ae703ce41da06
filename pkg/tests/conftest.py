"""Shared test plumbing: collects acceptance results and prints one
pass/fail line per criterion at the end of the run."""

ACCEPTANCE_RESULTS = []


def record_acceptance(num, desc, ok, detail=""):
    ACCEPTANCE_RESULTS.append((num, desc, bool(ok), detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, desc, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        suffix = f" {detail}" if detail else ""
        terminalreporter.write_line(f"ACCEPTANCE {num:2d} [{status}] {desc}{suffix}")
