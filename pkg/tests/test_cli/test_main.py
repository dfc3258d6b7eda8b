import json

import numpy as np
import pytest
from click.testing import CliRunner

from weightedkstab import __version__
from weightedkstab.config import Config
from weightedkstab.cli import cli
from weightedkstab.cli.main import NO_CERTIFICATE
from weightedkstab.cli.params import CSV_HEADER


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def record(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


class TestGroup:
    def test_version(self, runner):
        result = invoke(runner, "--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_exit_codes_in_help(self, runner):
        result = invoke(runner, "--help")
        assert "Exit codes" in result.output
        assert "No sign change" in result.output

    def test_config_file(self, runner, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"DEFAULT_TOLERANCE": 1e-6}))
        loose = record(invoke(runner, "--config", str(path), "check", "3-2-18"))["results"]["tolerance"]
        default = record(invoke(runner, "check", "3-2-18"))["results"]["tolerance"]
        assert loose == pytest.approx(1000 * default, rel=1e-6)

    def test_config_file_is_scoped_to_one_invocation(self, runner, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"DEFAULT_TOLERANCE": 1e-6}))
        before = record(invoke(runner, "check", "3-2-18"))["results"]["tolerance"]
        assert invoke(runner, "--config", str(path), "catalog").exit_code == 0
        assert Config.DEFAULT_TOLERANCE == 1e-9
        after = record(invoke(runner, "check", "3-2-18"))["results"]["tolerance"]
        assert after == before

    @pytest.mark.parametrize("content", ['{"NOT_A_SETTING": 1}', "[1, 2]", "{"])
    def test_bad_config_file(self, runner, tmp_path, content):
        path = tmp_path / "config.json"
        path.write_text(content)
        result = invoke(runner, "--config", str(path), "catalog")
        assert result.exit_code == 2
        assert "Error: Invalid input" in result.output

    def test_verbose(self, runner):
        result = invoke(runner, "-v", "check", "3-2-18")
        assert result.exit_code == 0
        assert "DEBUG weightedkstab" in result.output


class TestCatalog:
    def test_all_cases(self, runner):
        output = record(invoke(runner, "catalog"))
        assert output["schema_version"] == "1.0"
        assert output["command"] == "catalog"
        assert len(output["results"]["cases"]) == 12

    def test_by_id(self, runner):
        (case,) = record(invoke(runner, "catalog", "--id", "3-2-19"))["results"]["cases"]
        assert case["mori_mukai"] == "2-29"
        assert case["symmetric"] is True
        assert {tuple(v) for v in case["polytope"]["vertices"]} == {("0", "3"), ("4", "1"), ("4", "-1"), ("0", "-3")}
        assert case["polytope"]["kappa"] == ["2", "0"]

    def test_by_mori_mukai(self, runner):
        cases = record(invoke(runner, "catalog", "--mm", "1-16"))["results"]["cases"]
        assert [case["dm_id"] for case in cases] == ["3-2-4", "3-2-18"]

    @pytest.mark.parametrize("args", [("--id", "9-9-9"), ("--mm", "9-99")])
    def test_unknown(self, runner, args):
        result = invoke(runner, "catalog", *args)
        assert result.exit_code == 2
        assert "Unknown case" in result.output


class TestMeasures:
    def test_exact_pieces(self, runner):
        mu = record(invoke(runner, "measures", "3-2-17"))["results"]["mu"]
        assert mu["kind"] == "mu"
        assert mu["exact"] is True
        assert mu["density"]["breakpoints"] == ["-1", "0", "1"]
        assert mu["density"]["pieces"] == [["36"], ["36", "-96", "80", "-64/3"]]

    def test_totals(self, runner):
        results = record(invoke(runner, "measures", "3-2-21"))["results"]
        assert results["nu"]["total"] == "8"
        assert results["mu"]["support"] == ["-1", "3"]

    def test_logpair_at_zero_is_2_29(self, runner):
        logpair = record(invoke(runner, "measures", "--logpair", "0"))
        reference = record(invoke(runner, "measures", "3-2-19"))
        assert logpair["results"] == reference["results"]
        assert logpair["inputs"] == {"logpair": "0"}

    def test_quadric(self, runner):
        results = record(invoke(runner, "measures", "--quadric", "6"))["results"]
        folded = results["mu_folded"]
        assert folded["folded"] is True
        assert folded["density"]["breakpoints"] == ["0", "4"]
        assert folded["density"]["pieces"] == [["2048/3", "-1024", "512", "-320/3", "8"]]
        assert results["mu"]["total"] == "4096/15"

    def test_plot_csv(self, runner, tmp_path):
        path = tmp_path / "densities.csv"
        output = record(invoke(runner, "measures", "3-2-18", "--plot-csv", str(path), "--samples", "5"))
        assert output["inputs"]["samples"] == 5
        assert path.read_text().splitlines()[0] == CSV_HEADER
        table = np.loadtxt(path, delimiter=",", skiprows=1)
        assert table.shape == (5, 3)
        assert table[:, 0].tolist() == [-3.0, -1.5, 0.0, 1.5, 3.0]
        assert table[2, 1] == pytest.approx(36)
        assert table[2, 2] == pytest.approx(0)

    @pytest.mark.parametrize("args", [(), ("3-2-18", "--quadric", "5"), ("--logpair", "x")])
    def test_selector_errors(self, runner, args):
        assert invoke(runner, "measures", *args).exit_code == 2

    @pytest.mark.parametrize("args", [("1-16",), ("--logpair", "1"), ("--quadric", "4")])
    def test_domain_errors(self, runner, args):
        result = invoke(runner, "measures", *args)
        assert result.exit_code == 2
        assert result.output.startswith("Error: ")


class TestPolytopeFile:
    def test_custom_polytope(self, runner, tmp_path):
        path = tmp_path / "q3.json"
        path.write_text(json.dumps({"vertices": [[0, -3], [6, 0], [0, 3]]}))
        output = record(invoke(runner, "measures", "--polytope-file", str(path)))
        assert output["results"]["mu"]["total"] == "36"
        assert output["inputs"] == {"polytope_file": str(path)}

    def test_check_custom_polytope(self, runner, tmp_path):
        path = tmp_path / "q3.json"
        path.write_text(json.dumps({"vertices": [[0, -3], [6, 0], [0, 3]], "kappa": ["2", 0], "label": "Q3"}))
        result = invoke(runner, "check", "--polytope-file", str(path), "--weight", "cosh:a=3")
        assert result.exit_code == 4
        assert json.loads(result.stdout)["results"]["case"] == "Q3"

    @pytest.mark.parametrize(
        "document",
        [
            {"vertices": [[0, 0], [1, 0]]},
            {"vertices": [[0, -3], [6, 0], [0, 3]], "colour": "red"},
            {"vertices": [[0, -3], [6, 0], [0, 3]], "dh_exponent": -1},
            {"vertices": [[0, 0.5], [1, 0], [0, 1]]},
            {"vertices": [[0, 0], [2, 0], [1, 1], [2, 2], [0, 2]]},
            {"vertices": [[5, 4], [2, -3], [9, 1], [1, 1], [8, -3]]},
        ],
    )
    def test_invalid_documents(self, runner, tmp_path, document):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(document))
        result = invoke(runner, "measures", "--polytope-file", str(path))
        assert result.exit_code == 2
        assert "Invalid polytope file" in result.output

    def test_missing_file(self, runner, tmp_path):
        result = invoke(runner, "measures", "--polytope-file", str(tmp_path / "missing.json"))
        assert result.exit_code == 2


class TestCheck:
    @pytest.mark.parametrize(
        "case, weight, exit_code, classification",
        [
            ("3-2-18", "const:1", 0, "polystable"),
            ("3-2-18", "cosh:a=3", 4, "unstable"),
            ("3-2-18", "cosh:a=1", 0, "polystable"),
            ("3-2-21", "poly:1", 5, "futaki_nonzero"),
            ("3-2-4", "poly:1", 0, "polystable"),
            ("3-2-19", "sech", 0, "polystable"),
        ],
    )
    def test_verdicts(self, runner, case, weight, exit_code, classification):
        result = invoke(runner, "check", case, "--weight", weight)
        assert result.exit_code == exit_code
        output = json.loads(result.stdout)
        assert output["results"]["classification"] == classification
        assert output["results"]["exit_code"] == exit_code
        assert output["inputs"]["weight"] == weight

    def test_exact_values(self, runner):
        results = json.loads(invoke(runner, "check", "3-2-21", "--weight", "poly:1").stdout)["results"]
        assert results["futaki_exact"] == "8"
        assert results["futaki_method"] == "exact_rational"

    def test_default_weight(self, runner):
        output = record(invoke(runner, "check", "3-2-18"))
        assert output["results"]["margin_exact"] == "36"
        assert output["results"]["weight"] == "const:1"
        assert output["provenance"]["margin"] == "mu(const:1) by exact_rational"

    @pytest.mark.parametrize("weight", ["gauss:1", "poly:1,-1", "bump:lo=0,hi=1"])
    def test_bad_weights(self, runner, weight):
        result = invoke(runner, "check", "3-2-18", "--weight", weight)
        assert result.exit_code == 2
        assert "Error: " in result.output


class TestThreshold:
    def test_quadric_threefold(self, runner):
        output = record(invoke(runner, "threshold", "3-2-18"))
        assert output["results"]["a0"] == pytest.approx(1.81037, abs=5e-5)
        assert output["results"]["family"] == "cosh"
        lo, hi = output["results"]["bracket"]
        assert 0.1 <= lo <= output["results"]["a0"] <= hi <= 4.0
        assert output["inputs"]["bracket"] is None

    def test_bracket_option(self, runner):
        output = record(invoke(runner, "threshold", "2-29", "--bracket", "1,2"))
        assert output["results"]["a0"] == pytest.approx(1.3176, abs=5e-4)
        assert output["inputs"]["bracket"] == [1.0, 2.0]

    def test_no_sign_change(self, runner):
        result = invoke(runner, "threshold", "3-2-18", "--bracket", "0.1,1")
        assert result.exit_code == 6

    @pytest.mark.parametrize("args", [("3-2-17",), ("3-2-18", "--bracket", "1"), ("3-2-18", "--family", "sech")])
    def test_usage_errors(self, runner, args):
        assert invoke(runner, "threshold", *args).exit_code == 2


class TestCertify:
    def test_certificate(self, runner):
        results = record(invoke(runner, "certify", "3-2-17"))["results"]
        certificate = results["certificate"]
        assert certificate["lambda"] == "2"
        assert certificate["valid"] is True
        assert certificate["combined_density"]["breakpoints"] == ["-1", "0", "1"]
        assert certificate["per_interval_proofs"]

    def test_lambda_range(self, runner, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"KNOWN_LAMBDAS": []}))
        output = record(invoke(runner, "--config", str(path), "certify", "3-2-3", "--lambda-range", "0,1", "--grid", "3"))
        assert output["results"]["certificate"]["lambda"] == "2/3"
        assert output["inputs"]["lambda_range"] == ["0", "1"]

    def test_no_certificate(self, runner):
        results = record(invoke(runner, "certify", "3-2-19"))["results"]
        assert results["certificate"] is None
        assert results["message"] == NO_CERTIFICATE


class TestLogPair:
    def test_verdicts(self, runner):
        output = record(invoke(runner, "logpair"))
        results = output["results"]
        assert results["t0"] == pytest.approx(0.3874258867, abs=1e-9)
        assert results["constant"]["classification"] == "strictly_semistable"
        assert results["sech"]["classification"] == "polystable"
        assert results["bump"]["classification"] == "polystable"
        assert output["inputs"]["eps"] == "1/2"


class TestQuadric:
    def test_q3(self, runner):
        results = record(invoke(runner, "quadric", "5"))["results"]
        assert results["mu_one"] == "36"
        assert results["mu_one_exact"] is True
        destabilizing = results["destabilizing"]
        assert destabilizing["weight"].startswith("bump:lo=1.5,hi=3.0,eps=0.375,sym=true")
        assert destabilizing["verdict"]["classification"] == "unstable"

    def test_q4(self, runner):
        results = record(invoke(runner, "quadric", "6"))["results"]
        assert results["mu_one"] == "4096/15"
        assert results["mu_folded"]["breakpoints"] == ["0", "4"]

    def test_out_of_range(self, runner):
        result = invoke(runner, "quadric", "4")
        assert result.exit_code == 2
        assert "Parameter outside of the supported range" in result.output
