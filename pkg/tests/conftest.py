import subprocess
import sys

import pytest


@pytest.fixture
def cli():
    """Run the installed CLI module; returns (exit code, stdout, stderr)."""

    def run(*args, stdin=None):
        proc = subprocess.run(
            [sys.executable, "-m", "quasiplanar", *args],
            input=stdin,
            capture_output=True,
            text=True,
            timeout=300,
        )
        return proc.returncode, proc.stdout, proc.stderr

    return run
