"""
Tests for the command-line view.
"""

import os
from unittest import mock

import pytest

from src.controllers.certify.checks import CHECKS
from src.models.certificate import Certificate
from src.views.cli import (EXIT_INCONSISTENCY, EXIT_MISMATCH, EXIT_PASS, EXIT_USAGE,
                           build_parser, main)
from src.utils.errors import InconsistencyError


@pytest.fixture
def cli_env(fresh_config, temp_dir):
    """Config in a temporary directory and an output directory beside it"""
    out = os.path.join(str(temp_dir), "certs")
    return fresh_config, out


def _fake_check(status_ok: bool, check_id: str = "self-dual"):
    def run(ctx):
        cert = Certificate(check_id)
        cert.require("forced", status_ok)
        return cert
    return run


class TestParser:
    """Argument parsing"""

    def test_global_flags(self):
        args = build_parser().parse_args(["--workers", "4", "--witnesses", "full", "check", "p3-gram"])
        assert args.workers == 4
        assert args.witnesses == "full"
        assert args.command == "check"
        assert args.check_id == "p3-gram"


class TestMain:
    """Exit codes and subcommands"""

    def test_list(self, cli_env, capsys):
        assert main(["list"]) == EXIT_PASS
        out = capsys.readouterr().out.splitlines()
        assert [line.split("\t")[0] for line in out] == list(CHECKS)

    @pytest.mark.parametrize("argv", [
        [],
        ["check"],
        ["check", "p9-unknown"],
        ["export-shell", "lipschitz"],
        ["--workers", "many", "all"],
        ["frobnicate"],
    ])
    def test_usage_errors(self, cli_env, argv):
        assert main(argv) == EXIT_USAGE

    def test_invalid_witness_config(self, cli_env):
        config, _ = cli_env
        config.set("verification", "witnesses", "verbose", persist=False)
        assert main(["check", "self-dual"]) == EXIT_USAGE

    def test_export_shell_stdout(self, cli_env, capsys):
        assert main(["export-shell", "gaussian"]) == EXIT_PASS
        assert len(capsys.readouterr().out.splitlines()) == 4

    def test_export_shell_file(self, cli_env, capsys):
        _, out = cli_env
        path = os.path.join(out, "eisenstein.txt")
        assert main(["--out", path, "export-shell", "eisenstein"]) == EXIT_PASS
        with open(path, encoding="ascii") as f:
            assert len(f.read().splitlines()) == 6
        assert capsys.readouterr().out == ""

    def test_check_writes_certificate(self, cli_env):
        _, out = cli_env
        assert main(["--out", out, "check", "self-dual"]) == EXIT_PASS
        assert os.path.exists(os.path.join(out, "self-dual.cert"))

    def test_mismatch_exit_code(self, cli_env):
        _, out = cli_env
        with mock.patch.dict(CHECKS, {"self-dual": ("forced", _fake_check(False))}):
            assert main(["--out", out, "check", "self-dual"]) == EXIT_MISMATCH

    def test_inconsistency_exit_code(self, cli_env):
        _, out = cli_env

        def broken(ctx):
            raise InconsistencyError("closure strategies disagree")

        with mock.patch.dict(CHECKS, {"self-dual": ("broken", broken)}):
            assert main(["--out", out, "check", "self-dual"]) == EXIT_INCONSISTENCY

    def test_all_subset(self, cli_env):
        _, out = cli_env
        fake = {k: (d, _fake_check(True, k)) for k, (d, _) in CHECKS.items()}
        with mock.patch.dict(CHECKS, fake):
            assert main(["--out", out, "all"]) == EXIT_PASS
        with open(os.path.join(out, "MANIFEST"), encoding="ascii") as f:
            lines = f.read().splitlines()
        assert lines[0] == "tool=golden-orders"
        assert lines[-2] == "status=PASS"
