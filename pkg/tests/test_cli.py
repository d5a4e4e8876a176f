import io
import json
import math

import pytest

from alphaspec import cli
from alphaspec.classifier import UNDETERMINED
from alphaspec.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrum:
    def test_half_family(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--half", "8,2",
                               "--alpha", "0")
        assert code == 0
        data = json.loads(out)
        assert data["rho"] == 5.0
        assert data["alpha"] == 0.0
        assert len(data["vector"]) == 8

    def test_family(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "8,1,2",
                               "--alpha", "0")
        assert code == 0
        assert json.loads(out)["rho"] == pytest.approx(5.069517991915756,
                                                       abs=1e-9)

    def test_graph6_literal(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--graph6", "A_",
                               "--alpha", "0.5")
        assert code == 0
        assert json.loads(out)["rho"] == 1.0

    def test_graph6_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("A_\nC~\n\n"))
        code, out, _ = run_cli(capsys, "spectrum", "--graph6", "-",
                               "--alpha", "0")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert json.loads(lines[0])["rho"] == 1.0
        assert json.loads(lines[1])["rho"] == 3.0

    def test_twelve_digit_rounding(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--half", "6,2",
                               "--alpha", "0")
        value = json.loads(out)["rho"]
        assert value == float(f"{(1 + math.sqrt(33)) / 2:.12g}")

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--alpha", "0")
        assert code == 2
        assert "exactly one" in err
        code, _, _ = run_cli(capsys, "spectrum", "--half", "8,2",
                             "--family", "8,1,2", "--alpha", "0")
        assert code == 2

    def test_bad_graph6(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--graph6", "C~\x19",
                               "--alpha", "0")
        assert code == 2
        assert "error" in err

    def test_bad_family_params(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--family", "7,1,2",
                               "--alpha", "0")
        assert code == 2
        code, _, err = run_cli(capsys, "spectrum", "--family", "8,1",
                               "--alpha", "0")
        assert code == 2

    def test_bad_alpha(self, capsys):
        code, _, _ = run_cli(capsys, "spectrum", "--half", "8,2",
                             "--alpha", "1.5")
        assert code == 2


class TestClassify:
    def test_determined(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "8", "--t", "1",
                               "--k", "2", "--alpha", "0")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "ExtremalT"
        assert data["delta1"] == -4.0
        assert "resolved" not in data

    def test_invalid_params(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--n", "7", "--t", "1",
                               "--k", "2", "--alpha", "0")
        assert code == 2
        assert "even" in err

    def test_undetermined_exits_three(self, capsys, monkeypatch):
        # no real input reaches the fallback on any range we scanned, so
        # stub the classifier to exercise the exit-code contract
        class Stub:
            verdict = UNDETERMINED

            def to_json(self):
                return {"verdict": UNDETERMINED, "resolved": "Half"}

        monkeypatch.setattr(cli, "classify", lambda params: Stub())
        code, out, _ = run_cli(capsys, "classify", "--n", "8", "--t", "1",
                               "--k", "2", "--alpha", "0")
        assert code == 3
        assert json.loads(out)["resolved"] == "Half"


class TestVerifyIdentity:
    def test_text_mode(self, capsys):
        code, out, _ = run_cli(capsys, "verify-identity")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert all(line.endswith(": PASS") for line in lines)

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(capsys, "verify-identity", "--json")
        assert code == 0
        data = json.loads(out)
        assert [i["pass"] for i in data["identities"]] == [True] * 3

    def test_perturbation_hook(self, capsys):
        code, out, _ = run_cli(capsys, "verify-identity", "--perturb",
                               "alpha-zero-link")
        assert code == 4
        assert "FAIL" in out
        assert "residual" in out

    def test_bad_perturb_name(self, capsys):
        code, _, err = run_cli(capsys, "verify-identity", "--perturb", "nope")
        assert code == 2


class TestSearch:
    def test_exhaustive_confirmed(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--n", "6", "--t", "1",
                               "--k", "2", "--alpha", "0", "--exhaustive")
        assert code == 0
        data = json.loads(out)
        assert data["verdict_confirmed"] is True
        assert data["examined"] == 32768
        assert data["admissible"] == 2406

    def test_exhaustive_cap(self, capsys):
        code, _, err = run_cli(capsys, "search", "--n", "9", "--t", "1",
                               "--k", "3", "--alpha", "0", "--exhaustive")
        assert code == 2
        assert "capped" in err

    def test_sample_unconfirmed_exits_four(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--n", "8", "--t", "1",
                               "--k", "2", "--alpha", "0.5", "--samples",
                               "500", "--seed", "1")
        data = json.loads(out)
        if data["verdict_confirmed"]:
            assert code == 0  # astronomically unlikely, but honest
        else:
            assert code == 4

    def test_mode_required(self, capsys):
        code, _, _ = run_cli(capsys, "search", "--n", "6", "--t", "1",
                             "--k", "2", "--alpha", "0")
        assert code == 2


class TestProbeCommand:
    def test_exhaustive(self, capsys):
        code, out, _ = run_cli(capsys, "probe", "--n", "6", "--alpha", "0",
                               "--exhaustive")
        assert code == 0
        data = json.loads(out)
        assert data["violations"] == []
        assert data["examined"] == 32768

    def test_sampled(self, capsys):
        code, out, _ = run_cli(capsys, "probe", "--n", "8", "--alpha", "0.5",
                               "--samples", "2000", "--seed", "3")
        assert code == 0
        assert json.loads(out)["violations"] == []

    def test_bad_alpha(self, capsys):
        code, _, _ = run_cli(capsys, "probe", "--n", "8", "--alpha", "0.25",
                             "--exhaustive")
        assert code == 2


class TestSweep:
    def test_text_table(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--t", "1", "--k", "2",
                               "--alpha", "0", "--n-range", "4..10")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split()[:4] == ["n", "t", "k", "alpha"]
        assert len(lines) == 5  # header + n in {4, 6, 8, 10}
        assert "ExtremalT" in lines[3]

    def test_csv_file(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        code, out, _ = run_cli(capsys, "sweep", "--t", "1", "--k", "2",
                               "--alpha", "0", "--n-range", "4..8",
                               "--csv", str(target))
        assert code == 0
        rows = target.read_text().strip().splitlines()
        assert rows[0] == "n,t,k,alpha,delta1,delta2,delta,rho_t,rho_half," \
                          "verdict"
        assert rows[3].startswith("8,1,2,0,")
        assert ",272," in rows[3]

    def test_alpha_nonzero_leaves_delta_blank(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        run_cli(capsys, "sweep", "--t", "1", "--k", "2", "--alpha", "0.5",
                "--n-range", "6..6", "--csv", str(target))
        rows = target.read_text().strip().splitlines()
        cells = rows[1].split(",")
        assert cells[6] == ""

    def test_empty_range(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--t", "3", "--k", "2",
                               "--alpha", "0", "--n-range", "4..7")
        assert code == 2
        assert "no valid scenarios" in err

    def test_bad_range_syntax(self, capsys):
        code, _, _ = run_cli(capsys, "sweep", "--t", "1", "--k", "2",
                             "--alpha", "0", "--n-range", "4-7")
        assert code == 2


class TestConfig:
    def test_config_supplies_defaults(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"workers": 2, "seed": 42}')
        monkeypatch.setenv("ALPHASPEC_CONFIG", str(cfg))
        code, out, _ = run_cli(capsys, "search", "--n", "6", "--t", "1",
                               "--k", "2", "--alpha", "0", "--samples",
                               "1000")
        assert code in (0, 4)
        seeded = json.loads(out)
        # explicit flag overrides the config seed
        code, out2, _ = run_cli(capsys, "search", "--n", "6", "--t", "1",
                                "--k", "2", "--alpha", "0", "--samples",
                                "1000", "--seed", "43")
        assert json.loads(out2) != seeded

    def test_config_format_json(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"format": "json"}')
        monkeypatch.setenv("ALPHASPEC_CONFIG", str(cfg))
        code, out, _ = run_cli(capsys, "verify-identity")
        assert code == 0
        assert json.loads(out)["identities"]

    def test_unknown_key_rejected(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"bogus": 1}')
        monkeypatch.setenv("ALPHASPEC_CONFIG", str(cfg))
        code, _, err = run_cli(capsys, "classify", "--n", "8", "--t", "1",
                               "--k", "2", "--alpha", "0")
        assert code == 2
        assert "unknown keys" in err

    def test_malformed_config(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("[1, 2]")
        monkeypatch.setenv("ALPHASPEC_CONFIG", str(cfg))
        code, _, _ = run_cli(capsys, "classify", "--n", "8", "--t", "1",
                             "--k", "2", "--alpha", "0")
        assert code == 2

    def test_output_key_redirects_sweep(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        target = tmp_path / "out.csv"
        cfg.write_text(json.dumps({"output": str(target)}))
        monkeypatch.setenv("ALPHASPEC_CONFIG", str(cfg))
        code, _, _ = run_cli(capsys, "sweep", "--t", "1", "--k", "2",
                             "--alpha", "0", "--n-range", "6..8")
        assert code == 0
        assert target.exists()


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert run_cli(capsys, )[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2
