"""Collects the acceptance verdicts so they print as one line per criterion."""

ACCEPTANCE = {}


def record(criterion, ok, detail=""):
    ACCEPTANCE[criterion] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[criterion]
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
