import pytest

from nijenhuis import kernel

_DEFAULT_BACKEND = kernel.backend

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def _restore_kernel():
    yield
    for name in kernel.available_backends():
        kernel.get_backend_module(name).set_bdia_sign(-1)
    kernel.set_backend(_DEFAULT_BACKEND)


@pytest.fixture(params=kernel.available_backends())
def backend(request):
    kernel.set_backend(request.param)
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
