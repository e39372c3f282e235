import pytest
from hypothesis import settings

from lsseq import kernels

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

GRID = [(L, S) for L in range(1, 6) for S in range(0, L + 1)]
BACKENDS = kernels.available()


@pytest.fixture(params=BACKENDS)
def backend(request):
    previous = kernels.BACKEND
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
