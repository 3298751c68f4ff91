import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")



def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion and echo it."""
    lines = request.config._acceptance_lines

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if config._acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(config._acceptance_lines):
            terminalreporter.write_line(line)
