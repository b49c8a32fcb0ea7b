import pytest

_ACCEPTANCE: list[tuple[str, str, bool]] = []


@pytest.fixture
def record():
    """Log one acceptance line; call before asserting so failures are listed too."""
    def _record(tag, text, ok):
        _ACCEPTANCE.append((str(tag), text, bool(ok)))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for tag, text, ok in sorted(_ACCEPTANCE, key=lambda r: (not r[0].isdigit(), int(r[0]) if r[0].isdigit() else 0, r[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{tag}] {text}")
