import json

import pytest

from baslab.cli import RunConfig, main, parse_config, run_config


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSpecExamples:
    def test_plambda_a1_weight_two(self, capsys):
        code, out, _ = run_cli(capsys, "plambda", "--type", "A1", "--weight", "2")
        assert code == 0
        assert out.splitlines()[0] == "h1^2 - h1"
        assert "factors:" in out

    def test_witness_a1(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "--type", "A1", "--weight", "1",
                               "--point", "0")
        assert code == 0
        assert 'witness word "s1"' in out
        assert "value -2" in out

    def test_glue_homdim_tilde(self, capsys):
        code, out, _ = run_cli(capsys, "glue-homdim", "--example", "tildeA")
        assert code == 0
        assert out.strip() == "2"

    def test_glue_homdim_hat(self, capsys):
        code, out, _ = run_cli(capsys, "glue-homdim", "--example", "hatA")
        assert code == 0
        assert out.strip() == "infinite(periodic)"

    def test_glue_subcommand_form(self, capsys):
        code, out, _ = run_cli(capsys, "glue", "homdim", "--example", "tildeA")
        assert code == 0
        assert out.strip() == "2"

    def test_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "oracle", "--factors", "2")
        assert code == 0
        assert "pass" in out and "scalar=1" in out


class TestExitCodes:
    def test_usage_error_bad_type(self, capsys):
        code, _, err = run_cli(capsys, "roots", "--type", "Z9")
        assert code == 2
        assert "error" in err

    def test_usage_error_bad_weight(self, capsys):
        code, _, err = run_cli(capsys, "plambda", "--type", "A1", "--weight", "x")
        assert code == 2

    def test_usage_error_rank_mismatch(self, capsys):
        code, _, err = run_cli(capsys, "plambda", "--type", "A2", "--weight", "1")
        assert code == 2

    def test_non_dominant_weight_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "plambda", "--type", "A1", "--weight", "-1")
        assert code == 2

    def test_verification_failure_negative_control(self, capsys):
        code, out, _ = run_cli(capsys, "glue-axioms", "--example", "hatA",
                               "--corrupt-mu")
        assert code == 1
        assert "FAIL" in out

    def test_argparse_usage(self, capsys):
        assert main(["no-such-command"]) == 2

    def test_selftest_single_suite(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--suite",
                               "glue-corner-dimensions")
        assert code == 0
        assert "PASS glue-corner-dimensions" in out


class TestDeterminism:
    def test_json_reports_byte_identical(self, capsys):
        args = ("plambda", "--type", "A2", "--weight", "1,1", "--format", "json")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2
        json.loads(out1)

    def test_selftest_deterministic_for_seed(self, capsys):
        args = ("selftest", "--suite", "twisted-action-laws", "--seed", "5",
                "--format", "json")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2


class TestConfigRoundTrip:
    @pytest.mark.parametrize("argv", [
        ["roots", "--type", "A2"],
        ["plambda", "--type", "A1", "--weight", "2", "--format", "json"],
        ["witness", "--type", "B2", "--weight", "1,1", "--point", "0,1/2"],
        ["oracle", "--factors", "2,1"],
        ["glue-homdim", "--example", "hatA", "--cutoff", "9"],
        ["glue-axioms", "--example", "tildeA", "--corrupt-mu"],
        ["selftest", "--seed", "3", "--suite", "oracle-match"],
    ])
    def test_round_trip(self, argv):
        cfg = parse_config(argv)
        assert parse_config(cfg.to_args()) == cfg

    def test_glue_nested_normalizes(self):
        cfg = parse_config(["glue", "demo", "--example", "hatA"])
        assert cfg.command == "glue-demo"
        assert parse_config(cfg.to_args()) == cfg


class TestCutoffPrecedence:
    def test_env_cutoff(self, capsys, monkeypatch):
        monkeypatch.setenv("BASLAB_CUTOFF", "7")
        code, out, _ = run_cli(capsys, "glue-homdim", "--example", "tildeA",
                               "--format", "json")
        assert code == 0
        assert json.loads(out)["cutoff"] == 7

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BASLAB_CUTOFF", "7")
        code, out, _ = run_cli(capsys, "glue-homdim", "--example", "tildeA",
                               "--cutoff", "9", "--format", "json")
        assert json.loads(out)["cutoff"] == 9

    def test_default_cutoff(self, capsys, monkeypatch):
        monkeypatch.delenv("BASLAB_CUTOFF", raising=False)
        code, out, _ = run_cli(capsys, "glue-homdim", "--example", "tildeA",
                               "--format", "json")
        assert json.loads(out)["cutoff"] == 12


class TestFileSpecs:
    def test_algebra_and_module_files(self, capsys, tmp_path):
        quiver = {
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "x12", "src": "2", "tgt": "1"},
                {"name": "x21", "src": "1", "tgt": "2"},
            ],
            "relations": [
                [{"coeff": "1", "path": ["x21", "x12"]}],
                [{"coeff": "1", "path": ["x12", "x21"]}],
            ],
            "idempotents": "vertices",
        }
        alg = tmp_path / "alg.json"
        alg.write_text(json.dumps(quiver))
        mod = tmp_path / "m1.json"
        mod.write_text(json.dumps({
            "dim": 1,
            "action": {"e_1": [[1]], "e_2": [[0]], "x12": [[0]], "x21": [[0]]},
        }))
        code, out, _ = run_cli(capsys, "glue-homdim", "--algebra", str(alg))
        assert code == 0 and out.strip() == "infinite(periodic)"
        code, out, _ = run_cli(capsys, "glue-axioms", "--algebra", str(alg),
                               "--module", str(mod), "--format", "json")
        assert code == 0
        assert json.loads(out)["passed"]

    def test_missing_file_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "glue-homdim", "--algebra", "/nope.json")
        assert code == 2
