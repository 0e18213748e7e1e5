import pytest

from negcurve import linalg


@pytest.fixture(params=["compiled", "python"])
def modp_backend(request, monkeypatch):
    """Run a test once per F_p elimination backend."""
    if request.param == "compiled":
        if linalg._rref_modp_compiled is None:
            pytest.skip("compiled kernel not built")
    else:
        monkeypatch.setattr(linalg, "_rref_modp_compiled", None)
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
