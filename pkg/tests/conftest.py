import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record (criterion, part) -> (ok, detail) for the end-of-run summary."""

    def record(criterion, part, ok, detail):
        _ACCEPTANCE[(criterion, part)] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted({c for c, _ in _ACCEPTANCE}):
        parts = sorted((p, v) for (c, p), v in _ACCEPTANCE.items() if c == crit)
        ok = all(v[0] for _, v in parts)
        detail = "; ".join(f"{p}: {'ok' if v[0] else 'FAILED'} ({v[1]})" for p, v in parts)
        tr.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'} -- {detail}")
