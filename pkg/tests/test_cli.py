"""Tests for the command line"""
import json

import pytest
from click.testing import CliRunner

from core.cli import EXIT_CONSISTENCY, EXIT_DOMAIN, EXIT_OK, cli, exit_code_for, main


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestExitCodes:
    """Test the mapping from error kinds to exit status"""

    @pytest.mark.parametrize(
        "kind, code",
        [
            ("InvalidDiscriminantError", EXIT_DOMAIN),
            ("NotApplicableError", EXIT_DOMAIN),
            ("ConfigurationError", EXIT_DOMAIN),
            ("ConsistencyError", EXIT_CONSISTENCY),
            ("PrecisionError", EXIT_CONSISTENCY),
            ("ValueError", EXIT_CONSISTENCY),
            (None, EXIT_CONSISTENCY),
        ],
    )
    def test_exit_code_for(self, kind, code):
        """Test domain errors exit 1 and everything else 2"""
        assert exit_code_for(kind) == code


class TestCommands:
    """Test subcommand output"""

    def test_invariants(self, runner):
        """Test the JSON record for W_44"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "invariants", "44"]))
        assert data["command"] == "invariants"
        assert data["params"] == {"D": 44}
        (comp,) = data["result"]
        assert comp["genus"] == 1
        assert comp["cusps"] == 9
        assert comp["chi"] == "-21/2"
        assert "elapsed_ms" not in data

    def test_timing(self, runner):
        """Test --timing adds the elapsed time"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "--timing", "chi", "44"]))
        assert data["elapsed_ms"] >= 0
        assert data["result"]["chi_WD"] == "-21/2"

    def test_classnumber(self, runner):
        """Test h(-20) = 2 with its reduced forms"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "classnumber", "--", "-20"]))
        assert data["result"]["h"] == 2
        assert sorted(map(tuple, data["result"]["forms"])) == [(1, 0, 5), (2, 2, 3)]

    def test_prototypes(self, runner):
        """Test prototypes of a split discriminant carry their spin"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "prototypes", "17"]))
        assert {p["spin"] for p in data["result"]} == {0, 1}

    def test_prototypes_csv(self, runner):
        """Test CSV prototypes with a spin column"""
        result = runner.invoke(cli, ["--jobs", "1", "prototypes", "17", "--format", "csv"])
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == ["D,e,c,b,spin", "17,-1,1,9,1", "17,-1,3,3,0"]

    def test_prototypes_csv_unsplit(self, runner):
        """Test the spin cell is blank when W_D is not split"""
        result = runner.invoke(cli, ["--jobs", "1", "prototypes", "44", "--format", "csv"])
        lines = result.output.splitlines()
        assert len(lines) == 4
        assert all(line.startswith("44,") and line.endswith(",") for line in lines[1:])

    def test_fd_defaults_to_table_form(self, runner):
        """Test fd prints f_16 primitive and f_8 as its radical"""
        result = runner.invoke(cli, ["--jobs", "1", "fd", "16"])
        assert result.output.splitlines()[0] == "2t^2+73t+170"
        data = _json(runner.invoke(cli, ["--jobs", "1", "fd", "8", "--json"]))
        assert data["params"]["form"] == "radical"
        assert data["result"]["polynomial"] == "t+6"

    def test_fd_76_prints_the_listed_cubic(self, runner):
        """Test the default output of f_76 is its tabulated irreducible factor"""
        result = runner.invoke(cli, ["--jobs", "1", "fd", "76"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "t^3+3t^2+3459t+6913"
        assert "(t^3+3t^2+3459t+6913)" in lines[1]

    def test_fd_unlisted_discriminant_is_primitive(self, runner):
        """Test a discriminant without a Table C row falls back to the primitive form"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "fd", "57", "--json"]))
        assert data["params"]["form"] == "primitive"

    def test_fd_primitive(self, runner):
        """Test the integer form of f_16 and its linear factors"""
        result = runner.invoke(cli, ["--jobs", "1", "fd", "16", "--form", "primitive"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "2t^2+73t+170"
        assert lines[1] == "(2t+5) * (t+34)"

    def test_fd_json(self, runner):
        """Test exact coefficients in JSON mode"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "fd", "8", "--form", "defining", "--json"]))
        assert data["result"]["coefficients"] == ["36", "12", "1"]
        assert data["result"]["factors"] == [{"factor": "t+6", "multiplicity": 2}]

    def test_table_csv(self, runner):
        """Test the CSV table over a small range"""
        result = runner.invoke(cli, ["--jobs", "1", "table", "--from", "5", "--to", "30"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "D,spin,genus,e2,e4,e5,cusps,chi_num,chi_den,flags"
        assert lines[1] == "5,,0,1,0,1,1,-3,10,"
        assert "9,,0,1,0,0,2,-1,2,ref_only" in lines
        assert sum(1 for line in lines if line.startswith("17,")) == 2

    def test_table_json(self, runner):
        """Test the JSON table"""
        data = _json(
            runner.invoke(
                cli, ["--jobs", "1", "table", "--from", "44", "--to", "44", "--format", "json"]
            )
        )
        assert data["result"][0]["genus"] == 1

    def test_bounds(self, runner):
        """Test every inequality holds for D = 44"""
        data = _json(runner.invoke(cli, ["--jobs", "1", "bounds", "44"]))
        assert data["result"]["ok"] is True
        assert data["result"]["checks"]

    def test_verify_without_polynomials(self, runner):
        """Test the Table B regression passes"""
        result = runner.invoke(cli, ["--jobs", "1", "verify", "--no-polynomials"])
        assert result.exit_code == 0, result.output
        assert "OK: 142 rows, 0 polynomials" in result.output

    def test_unknown_command(self, runner):
        """Test click rejects unknown subcommands"""
        result = runner.invoke(cli, ["nonsense"])
        assert result.exit_code != 0


class TestMain:
    """Test exit status through main()"""

    def test_ok(self, capsys):
        """Test success exits 0"""
        assert main(["--jobs", "1", "chi", "17"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["command"] == "chi"

    def test_invalid_discriminant(self, capsys):
        """Test D = 6 exits 1"""
        assert main(["--jobs", "1", "invariants", "6"]) == EXIT_DOMAIN
        assert "error:" in capsys.readouterr().err

    def test_not_applicable(self, capsys):
        """Test f_20 is undefined"""
        assert main(["--jobs", "1", "fd", "20"]) == EXIT_DOMAIN

    def test_genus_zero_range_too_small(self, capsys):
        """Test the genus zero search needs a large enough range"""
        assert main(["--jobs", "1", "genus-zero", "--max", "100"]) == EXIT_DOMAIN

    def test_bad_option(self, capsys):
        """Test usage errors exit 1"""
        assert main(["--jobs", "1", "table", "--from", "5"]) == EXIT_DOMAIN

    def test_bad_environment(self, monkeypatch, capsys):
        """Test a malformed environment variable exits 1"""
        monkeypatch.setenv("WEIERSTRASS_PRECISION", "lots")
        assert main(["chi", "44"]) == EXIT_DOMAIN

    def test_help(self, capsys):
        """Test --help exits 0"""
        assert main(["--help"]) == EXIT_OK
        assert "Weierstrass" in capsys.readouterr().out
