def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion at the end of the run."""
    rows = []
    for status, label in (
        ("passed", "PASS"),
        ("failed", "FAIL"),
        ("xfailed", "XFAIL (documented)"),
        ("xpassed", "XPASS (unexpected)"),
    ):
        for report in terminalreporter.stats.get(status, ""):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(report, "when", "call") == "call":
                rows.append((nodeid.split("::")[-1], label))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, label in sorted(set(rows)):
            terminalreporter.write_line(f"{label:<20} {name}")
