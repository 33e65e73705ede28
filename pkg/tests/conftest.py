import pytest

# criterion number -> list of (sub-check, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def record(criterion: int, name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, []).append((name, passed, detail))
    line = acceptance_line(criterion)
    print(line)


def acceptance_line(criterion: int) -> str:
    parts = ACCEPTANCE[criterion]
    ok = all(p for _, p, _ in parts)
    detail = "; ".join(f"{n}: {'ok' if p else 'FAIL'}{' (' + d + ')' if d else ''}" for n, p, d in parts)
    return f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ACCEPTANCE):
        terminalreporter.write_line(acceptance_line(c))


@pytest.fixture
def recorder():
    return record
