import pytest

_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None or rep.when != "call":
        return
    reason = ""
    if rep.failed:
        crash = getattr(rep.longrepr, "reprcrash", None)
        reason = (crash.message if crash else str(rep.longrepr)).splitlines()[0]
    notes = "; ".join("%s=%s" % kv for kv in rep.user_properties)
    _results.append((m.args[0], m.args[1], rep.outcome.upper(), rep.duration, reason, notes))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for n, title, outcome, dur, reason, notes in sorted(_results):
        line = "criterion %2d  %-6s %s (%.1fs)" % (n, "PASS" if outcome == "PASSED" else "FAIL", title, dur)
        if reason:
            line += "  -- " + reason
        if notes:
            line += "  [" + notes + "]"
        tr.write_line(line)
