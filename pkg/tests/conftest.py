def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "LINES", None)
    if not lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(lines, key=lambda k: (int(k.rstrip("abc")), k)):
        terminalreporter.write_line(lines[key])
