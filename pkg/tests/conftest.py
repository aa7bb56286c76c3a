import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from forcinglab import kernels  # noqa: E402


@pytest.fixture(params=["python", "cython"])
def backend(request):
    if request.param == "python":
        return kernels.python_backend
    if kernels.compiled_backend is None:
        pytest.skip("compiled extension not built")
    return kernels.compiled_backend


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for n in sorted(REPORT):
            terminalreporter.write_line(REPORT[n])
