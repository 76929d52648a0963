def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for c in CRITERIA:
        if c.__name__ in RESULTS:
            ok, detail = RESULTS[c.__name__]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {c.__name__}: {detail}")
