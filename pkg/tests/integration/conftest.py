"""
Integration test fixtures: run the CLI in-process with logs under tmp_path.
"""
import pytest


@pytest.fixture
def run_cli(tmp_path, capsys):
    """Call leadlag.cli.main with argv; returns (exit_code, stdout, stderr)."""
    from leadlag.cli import main

    def _run(*argv):
        code = main(["--log-dir", str(tmp_path / "logs"), *map(str, argv)])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
