import json

import pytest

from src.main import main


@pytest.fixture(autouse=True)
def quiet_environment(monkeypatch):
    for key in ("FGLH_DEFAULT_ORDER", "FGLH_MAX_ORDER", "FGLH_DEFAULT_LAW", "FGLH_DEFAULT_INSTANCE",
                "FGLH_OUTPUT_FORMAT", "FGLH_CONCURRENT", "LOG_DIR"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("LOG_LEVEL", "WARNING")


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


class TestFglCommands:
    def test_n_series(self, capsys):
        status, out = run(capsys, "fgl", "n-series", "--law", "multiplicative", "--n", "3", "--order", "5")
        assert status == 0
        assert "phi^(3)(x) = 3*x + 3*x^2 + x^3" in out

    def test_inverse(self, capsys):
        status, out = run(capsys, "fgl", "inverse", "--law", "additive", "--order", "4")
        assert status == 0
        assert "theta(x) = -x" in out.splitlines()

    def test_validate(self, capsys):
        status, out = run(capsys, "fgl", "validate", "--law", "additive")
        assert status == 0
        assert "4 checks, 4 passed, 0 failed" in out

    def test_records_use_exact_rationals(self, capsys):
        status, out = run(capsys, "fgl", "inverse", "--law", "multiplicative", "--order", "3", "--format", "records")
        assert status == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert [(row["params"]["term"], row["detail"]) for row in rows] == [("x", "-1/1"), ("x^2", "1/1"), ("x^3", "-1/1")]
        assert {row["status"] for row in rows} == {"value"}

    def test_invalid_law_file(self, capsys, tmp_path):
        path = tmp_path / "broken-law.json"
        path.write_text(json.dumps({
            "kind": "law",
            "terms": [{"u": 1, "coefficient": "1"}, {"v": 1, "coefficient": "1"}, {"u": 2, "coefficient": "1"}],
        }), encoding="utf-8")
        status, out = run(capsys, "fgl", "n-series", "--law", str(path), "--order", "3")
        assert status == 1
        assert "FAIL  unit-left" in out

    def test_unknown_law_is_a_parse_error(self, capsys):
        status, out = run(capsys, "fgl", "show", "--law", "nonsense")
        assert status == 1
        assert out == ""


class TestHopfCommands:
    def test_antipode(self, capsys):
        status, out = run(capsys, "hopf", "antipode", "--instance", "beta", "--order", "3")
        assert status == 0
        assert "S(b1) = -b1" in out
        assert "S(b2) = b1^2 - b2" in out
        assert "S(b3) = -b1^3 + 2*b1*b2 - b3" in out

    def test_power_zero(self, capsys):
        status, out = run(capsys, "hopf", "power", "--n", "0", "--instance", "beta", "--order", "3")
        assert status == 0
        assert [line.split(" = ")[1] for line in out.splitlines() if " = " in line] == ["0", "0", "0"]

    def test_power_two(self, capsys):
        status, out = run(capsys, "hopf", "power", "--n", "2", "--instance", "beta", "--order", "3")
        assert status == 0
        assert "(2)(b2) = b1^2 + 2*b2" in out

    def test_corrupted_descriptor(self, capsys, tmp_path):
        path = tmp_path / "corrupt.json"
        path.write_text(json.dumps({
            "kind": "hopf",
            "generators": [{"name": "b1", "weight": 1}, {"name": "b2", "weight": 2}],
            "diagonals": {"b1": "b1_L + b1_R", "b2": "b2_L + b1_L"},
        }), encoding="utf-8")
        status, out = run(capsys, "hopf", "antipode", "--instance", str(path))
        assert status == 1
        assert "FAIL" in out


class TestExtensionCommands:
    def test_build(self, capsys):
        status, out = run(capsys, "ext", "build", "--law", "additive", "--order", "3")
        assert status == 0
        assert "PASS  extension" in out
        assert "PASS  unit-slots" in out

    def test_phi(self, capsys):
        status, out = run(capsys, "ext", "phi", "--n", "-1", "--law", "multiplicative", "--order", "3")
        assert status == 0
        assert "eps(Phi^(-1))(x) = -x + x^2 - x^3" in out

    def test_twist_zero(self, capsys):
        status, out = run(capsys, "ext", "twist", "--n", "0", "--law", "additive", "--order", "3")
        assert status == 0
        assert "G^(0)(u,v) = u + v" in out


class TestVerify:
    def test_smallest_run(self, capsys):
        status, out = run(capsys, "verify", "all", "--order", "2", "--range", "1")
        assert status == 0
        assert " 0 failed" in out.splitlines()[-1]

    def test_output_is_deterministic(self, capsys):
        first = run(capsys, "verify", "all", "--order", "2", "--range", "1", "--format", "records")
        second = run(capsys, "verify", "all", "--order", "2", "--range", "1", "--format", "records")
        assert first == second
        assert first[0] == 0

    def test_ext_verify_only_runs_extension_checks(self, capsys):
        status, out = run(capsys, "ext", "verify", "--order", "2", "--range", "1", "--format", "records")
        assert status == 0
        assert all("law" in json.loads(line)["params"] and "instance" in json.loads(line)["params"]
                   for line in out.splitlines())

    def test_order_above_ceiling(self, capsys):
        status, out = run(capsys, "verify", "all", "--order", "11")
        assert status == 2
        assert out == ""

    def test_ceiling_is_configurable(self, capsys, monkeypatch):
        monkeypatch.setenv("FGLH_MAX_ORDER", "2")
        status, _ = run(capsys, "fgl", "validate", "--law", "additive", "--order", "3")
        assert status == 2


def write_json(path, document):
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


class TestBrokenDescriptors:
    def no_antipode(self, tmp_path):
        # g is listed first, so its antipode is solved before h is known
        return write_json(tmp_path / "no-antipode.json", {
            "kind": "hopf",
            "generators": [{"name": "g", "weight": 1}, {"name": "h", "weight": 1}],
            "diagonals": {"g": "g_L + h_L + g_R", "h": "h_L + h_R"},
        })

    def test_verify_reports_every_suite(self, capsys, tmp_path):
        status, out = run(capsys, "verify", "all", "--order", "2", "--range", "1", "--instance", self.no_antipode(tmp_path))
        assert status == 1
        assert "PASS  fgl-axioms" in out
        assert "FAIL  antipode-left" in out
        assert "FAIL  graded-power" in out
        assert "HopfStructureError" in out
        assert " failed" in out.splitlines()[-1]

    def test_verify_records_keep_suite_order(self, capsys, tmp_path):
        status, out = run(capsys, "verify", "all", "--order", "2", "--range", "1", "--format", "records",
                          "--instance", self.no_antipode(tmp_path))
        assert status == 1
        checks = [json.loads(line)["check"] for line in out.splitlines()]
        assert checks[0] == "fgl-axioms"
        assert "hopf-axioms" in checks
        assert checks[-1] == "trivial-covering"

    def test_ext_build_rejects_invalid_law(self, capsys, tmp_path):
        path = write_json(tmp_path / "broken-law.json", {
            "kind": "law",
            "terms": [{"u": 1, "coefficient": "1"}, {"v": 1, "coefficient": "1"}, {"u": 2, "coefficient": "1"}],
        })
        status, out = run(capsys, "ext", "build", "--law", path, "--order", "3")
        assert status == 1
        assert "FAIL  unit-left" in out

    def test_ext_verify_with_invalid_law_fails_preparation(self, capsys, tmp_path):
        path = write_json(tmp_path / "broken-law.json", {
            "kind": "law",
            "terms": [{"u": 1, "coefficient": "1"}, {"v": 1, "coefficient": "1"}, {"u": 2, "coefficient": "1"}],
        })
        status, out = run(capsys, "ext", "verify", "--law", path, "--order", "3", "--range", "1")
        assert status == 1
        assert "FAIL  prepare" in out
        assert "InvalidFormalGroupLawError" in out
