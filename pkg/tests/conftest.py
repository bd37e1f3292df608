import io
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one PASS/FAIL line per acceptance criterion."""
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.fspath.basename == "test_acceptance.py":
        label = item.name.removeprefix("test_")
        status = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE {status}: {label}", flush=True)


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process, capturing stdout/stderr."""
    from enigme.cli import run

    def invoke(argv, env=None):
        import os

        out, err = io.StringIO(), io.StringIO()
        saved = {}
        if env:
            for key, value in env.items():
                saved[key] = os.environ.get(key)
                if value is None:
                    os.environ.pop(key, None)
                else:
                    os.environ[key] = value
        try:
            code = run(argv, stdout=out, stderr=err)
        finally:
            for key, value in saved.items():
                if value is None:
                    os.environ.pop(key, None)
                else:
                    os.environ[key] = value
        return code, out.getvalue(), err.getvalue()

    return invoke
