import os
import subprocess
import sys

import pytest


@pytest.fixture
def run_cli():
    """Run the CLI module in a subprocess and capture output + exit code."""

    def run(*args, env_extra=None):
        env = os.environ.copy()
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "structdet", *args],
            capture_output=True,
            text=True,
            env=env,
        )

    return run


@pytest.fixture
def make_bfile(tmp_path):
    """Write an OEIS-style b-file for the first `count` terms, optionally tampered."""

    def make(count, tamper_at=None, name="bfile.txt"):
        from structdet import d_sequence

        lines = ["# generated fixture for A067549 comparison"]
        for record in d_sequence(count):
            value = record.D_n + (1 if record.n == tamper_at else 0)
            lines.append(f"{record.n} {value}")
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n")
        return path

    return make
