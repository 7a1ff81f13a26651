import pytest

from instances import fig8_loop, fig8_pass

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def loop8():
    return fig8_loop()


@pytest.fixture
def pass8():
    return fig8_pass()


@pytest.fixture
def acceptance_report():
    def report(criterion: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
