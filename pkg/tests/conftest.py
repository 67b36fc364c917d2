import zlib

import numpy as np
import pytest

_acceptance_key = pytest.StashKey[list]()


@pytest.fixture
def rng(request):
    # one reproducible stream per test
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


@pytest.fixture
def report(request):
    """Record a one-line PASS/FAIL verdict, printed in the terminal summary."""
    lines = request.config.stash.setdefault(_acceptance_key, [])

    def _report(label, ok, detail):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        print(lines[-1])
        return ok

    return _report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
