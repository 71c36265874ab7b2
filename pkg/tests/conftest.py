import contextlib

ACCEPTANCE = []


@contextlib.contextmanager
def criterion(number, title):
    """Record a PASS/FAIL line for an acceptance criterion."""
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE.append((number, "FAIL", title, f"{type(exc).__name__}: {exc}".splitlines()[0][:160]))
        raise
    ACCEPTANCE.append((number, "PASS", title, ""))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, note in sorted(ACCEPTANCE):
        line = f"[{status}] criterion {number}: {title}"
        terminalreporter.write_line(line + (f"  ({note})" if note else ""))
