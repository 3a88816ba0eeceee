_AC_RESULTS = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_ac") or report.when != "call" and report.passed:
        return
    ac = name.split("_")[1].upper()
    ok = report.passed and _AC_RESULTS.get(ac, True)
    _AC_RESULTS[ac] = ok


def pytest_terminal_summary(terminalreporter):
    if not _AC_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for ac in sorted(_AC_RESULTS, key=lambda s: int(s[2:])):
        terminalreporter.write_line(f"{ac}: {'PASS' if _AC_RESULTS[ac] else 'FAIL'}")
