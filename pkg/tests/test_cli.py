"""Tests for the steiner command-line interface."""

import json
from pathlib import Path

from typer.testing import CliRunner

import src.cli as cli

runner = CliRunner()

FANO_TEXT = "sts 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n"


def invoke(*args: str):
    return runner.invoke(cli.app, list(args))


class TestClassifyCommand:
    """Tests for `steiner classify`."""

    def test_json(self, tmp_path: Path):
        """Test the Fano plane report in JSON, mirrored to --out."""
        out = tmp_path / "classes.json"
        res = invoke("classify", "-b", "sts7", "-f", "json", "-o", str(out))
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload == json.loads(out.read_text(encoding="utf-8"))
        assert payload["total_orientations"] == 128
        assert [c["aut_order"] for c in payload["classes"]] == [21, 21, 3, 3]
        assert all(m["aut_order_matches"] for m in payload["matches"])

    def test_json_class_shape(self):
        """Test classes carry triple arrays, catalog names and image-array generators."""
        res = invoke("classify", "-b", "sts7", "-f", "json")
        assert res.exit_code == 0
        classes = json.loads(res.stdout)["classes"]
        for c in classes:
            assert len(c["representative"]) == 7
            assert all(isinstance(t, list) and len(t) == 3 for t in c["representative"])
            assert isinstance(c["profile"], str)
            assert c["generators"]
            for g in c["generators"]:
                assert sorted(g) == list(range(1, 8))
        assert [c["profile"] for c in classes[:2]] == ["C7:C3", "C7:C3"]
        assert [c["mirror"] for c in classes] == [2, 1, 4, 3]

    def test_text(self):
        """Test the text summary line."""
        res = invoke("classify", "-b", "sts7")
        assert res.exit_code == 0
        assert res.stdout.startswith("STS(7): 7 triples, |Aut| = 168, 128 orientations, 4 classes")
        assert "o1_7 -> class" in res.stdout
        assert "generators: (" in res.stdout

    def test_csv(self):
        """Test one CSV row per class."""
        res = invoke("classify", "-b", "sts7", "-f", "csv")
        assert res.exit_code == 0
        lines = res.stdout.splitlines()
        assert lines[0] == "class,aut_order,orbit_size,group,reflexive,mirror,representative"
        assert len(lines) == 5

    def test_input_file(self, tmp_path: Path):
        """Test reading the design from a text file."""
        path = tmp_path / "fano.txt"
        path.write_text(FANO_TEXT, encoding="utf-8")
        res = invoke("classify", "-i", str(path), "-f", "json")
        assert res.exit_code == 0
        assert len(json.loads(res.stdout)["classes"]) == 4

    def test_cap_exit_code(self):
        """Test exceeding the triple cap exits 3."""
        res = invoke("classify", "-b", "sts9", "--max-triples", "10")
        assert res.exit_code == 3
        assert "error: TooManyTriples:" in res.output

    def test_deterministic(self):
        """Test repeated runs are byte-identical."""
        first = invoke("classify", "-b", "sts7", "-f", "json")
        second = invoke("classify", "-b", "sts7", "-f", "json")
        assert first.stdout == second.stdout


class TestAutCommand:
    """Tests for `steiner aut`."""

    def test_octonion(self):
        """Test the octonion orientation has group C7:C3."""
        res = invoke("aut", "-b", "o1_7")
        assert res.exit_code == 0
        assert "order 21 (C7:C3)" in res.stdout
        assert "reflexive: no" in res.stdout

    def test_small_class_json(self):
        """Test a single generator for an order-3 class."""
        res = invoke("aut", "-b", "o3_7", "-f", "json", "--elements")
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload["group"]["order"] == 3
        assert payload["group"]["generators"] == ["(2,4,6)(3,5,7)"]
        assert len(payload["group"]["elements"]) == 3

    def test_unoriented(self):
        """Test the plain Fano plane."""
        res = invoke("aut", "-b", "sts7", "-f", "json")
        payload = json.loads(res.stdout)
        assert payload["group"]["order"] == 168
        assert payload["reflexive"] is None

    def test_backtracking_search(self):
        """Test --exhaustive-degree 0 finds the same groups by backtracking."""
        plain = invoke("aut", "-b", "sts7", "-f", "json", "--exhaustive-degree", "0")
        assert plain.exit_code == 0
        assert json.loads(plain.stdout)["group"]["order"] == 168
        oriented = invoke("aut", "-b", "o1_7", "-f", "json", "--exhaustive-degree", "0")
        assert json.loads(oriented.stdout)["group"]["order"] == 21


class TestAlgebraCommands:
    """Tests for product, companion, zerodiv and axioms."""

    def test_zero_product(self):
        """Test (s1 + s5) x (s3 + s7) = 0 on the zero-divisor example."""
        res = invoke("product", "-b", "zd7", "--a", "s1+s5", "--b", "s3+s7", "-f", "json")
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload["is_zero"] is True
        assert payload["symbolic"] == "0"

    def test_basis_product(self):
        """Test s1 x s2 = s3 for the octonions."""
        res = invoke("product", "-b", "o1_7", "--a", "s1", "--b", "s2")
        assert res.exit_code == 0
        assert res.stdout.splitlines()[-1] == "= s3"

    def test_companion(self):
        """Test rank 4 and a three-dimensional kernel."""
        res = invoke("companion", "-b", "zd7", "--w", "s1+s5", "-f", "json")
        payload = json.loads(res.stdout)
        assert payload["rank"] == 4
        assert payload["skew_symmetric"] is True
        assert len(payload["kernel"]) == 3
        assert payload["side"] == "left"

    def test_right_companion(self):
        """Test --right transposes the matrix."""
        left = json.loads(invoke("companion", "-b", "zd7", "--w", "s1+s5", "-f", "json").stdout)
        right = json.loads(
            invoke("companion", "-b", "zd7", "--w", "s1+s5", "--right", "-f", "json").stdout
        )
        assert right["matrix"] == [list(col) for col in zip(*left["matrix"])]

    def test_zerodiv(self):
        """Test the zero-divisor verdict line."""
        res = invoke("zerodiv", "-b", "zd7", "--w", "s1+s5")
        assert res.exit_code == 0
        assert res.stdout.startswith("rank(A_w) = 4; zero-divisor: yes")

    def test_zerodiv_zero_vector(self):
        """Test w = 0 is invalid input."""
        res = invoke("zerodiv", "-b", "zd7", "--w", "0")
        assert res.exit_code == 2
        assert "error: ZeroVector:" in res.output

    def test_axioms_pass(self):
        """Test the octonion orientation passes all three axioms."""
        res = invoke("axioms", "-b", "o1_7")
        assert res.exit_code == 0
        assert "axiom3 (norm identity): PASS" in res.stdout

    def test_axioms_fail(self):
        """Test a small class fails the norm identity with a witness."""
        res = invoke("axioms", "-b", "o3_7", "-f", "json")
        payload = json.loads(res.stdout)
        assert payload["norm_identity"] is False
        assert payload["counterexample"]["lhs"] != payload["counterexample"]["rhs"]


class TestDynamicsCommands:
    """Tests for the dynamics subcommands."""

    def test_rank_full(self):
        """Test the full-growth pair reaches rank 7."""
        res = invoke(
            "dynamics", "rank", "-b", "rg7b", "--w", "s2+s3+s4", "--v", "s1+s2", "-f", "json"
        )
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload["plateau_rank"] == 7
        assert payload["exact"] is True

    def test_rank_zero_multiplier(self):
        """Test w = 0 plateaus at rank 1."""
        res = invoke("dynamics", "rank", "-b", "rg7b", "--w", "0", "--v", "s7", "-f", "json")
        assert json.loads(res.stdout)["plateau_rank"] == 1

    def test_rank_csv(self):
        """Test the k,rank CSV."""
        res = invoke("dynamics", "rank", "-b", "zd7", "--w", "s1+s5", "--v", "s2", "-f", "csv")
        lines = res.stdout.splitlines()
        assert lines[:4] == ["k,rank", "0,1", "1,2", "2,3"]

    def test_rank_numeric(self):
        """Test --numeric switches to float ranks."""
        res = invoke(
            "dynamics", "rank", "-b", "zd7", "--w", "s1+s5", "--v", "s2", "--numeric", "-f", "json"
        )
        payload = json.loads(res.stdout)
        assert payload["exact"] is False
        assert payload["plateau_rank"] == 3

    def test_seeded_vectors_are_deterministic(self):
        """Test omitted vectors are drawn from the seed."""
        args = ("dynamics", "rank", "-b", "rg7a", "--seed", "4", "-f", "json")
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_verify_pass(self):
        """Test the zero-divisor example passes every check."""
        res = invoke(
            "dynamics", "verify", "-b", "zd7", "--w", "s1+s5", "--v", "s2", "-f", "json"
        )
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload["passed"] is True
        assert all(c["pass"] for c in payload["checks"])

    def test_verify_failure_exits_1(self):
        """Test a horizon too short for the limit exits 1."""
        res = invoke(
            "dynamics", "verify", "-b", "zd7", "--w", "s1+s5", "--v", "s2", "--horizon", "3"
        )
        assert res.exit_code == 1
        assert "limit: FAIL" in res.stdout

    def test_verify_tolerance_override(self):
        """Test --tol-cesaro tightens the Cesaro check."""
        args = ["dynamics", "verify", "-b", "zd7", "--w", "s1+s5", "--v", "s2"]
        args += ["--horizon", "10001"]
        assert invoke(*args).exit_code == 0
        res = invoke(*args, "--tol-cesaro", "1e-6")
        assert res.exit_code == 1
        assert "cesaro: FAIL" in res.stdout

    def test_trace(self, tmp_path: Path):
        """Test the trace CSV has one row per step plus the header."""
        out = tmp_path / "trace.csv"
        args = ["dynamics", "trace", "-b", "zd7", "--w", "s1+s5", "--v", "s2", "--steps", "3"]
        res = invoke(*args, "-o", str(out))
        assert res.exit_code == 0
        assert out.read_text(encoding="utf-8") == res.stdout
        assert len(res.stdout.splitlines()) == 5


class TestErrors:
    """Tests for error reporting and exit codes."""

    def test_unknown_model(self):
        """Test unknown builtins exit 2 with a coded message."""
        res = invoke("aut", "-b", "sts13")
        assert res.exit_code == 2
        assert "error: UnknownModel: unknown builtin model: sts13" in res.output

    def test_both_sources(self, tmp_path: Path):
        """Test --builtin and --input are exclusive."""
        path = tmp_path / "fano.txt"
        path.write_text(FANO_TEXT, encoding="utf-8")
        res = invoke("aut", "-b", "sts7", "-i", str(path))
        assert res.exit_code == 2
        assert "error: CommandError:" in res.output

    def test_unoriented_product(self):
        """Test products need an oriented system."""
        res = invoke("product", "-b", "sts7", "--a", "s1", "--b", "s2")
        assert res.exit_code == 2

    def test_syntax_error(self, tmp_path: Path):
        """Test malformed files report their position."""
        path = tmp_path / "bad.txt"
        path.write_text("sts 7\n1 2\n", encoding="utf-8")
        res = invoke("classify", "-i", str(path))
        assert res.exit_code == 2
        assert "error: DesignSyntaxError: line 2" in res.output

    def test_missing_file(self, tmp_path: Path):
        """Test unreadable input exits 2."""
        res = invoke("classify", "-i", str(tmp_path / "missing.txt"))
        assert res.exit_code == 2
        assert "error: InputError:" in res.output

    def test_dimension_mismatch(self):
        """Test vectors must fit the design."""
        res = invoke("product", "-b", "quat3", "--a", "s4", "--b", "s1")
        assert res.exit_code == 2
        assert "error: DimensionMismatch:" in res.output

    def test_bad_format(self):
        """Test unknown formats are rejected."""
        res = invoke("aut", "-b", "sts7", "-f", "xml")
        assert res.exit_code == 2

    def test_csv_not_available(self):
        """Test commands without a CSV form reject it."""
        res = invoke("zerodiv", "-b", "zd7", "--w", "s1", "-f", "csv")
        assert res.exit_code == 2

    def test_empty_json_design(self, tmp_path: Path):
        """Test an empty JSON triple list without n exits 2."""
        path = tmp_path / "d.json"
        path.write_text('{"triples": []}', encoding="utf-8")
        res = invoke("aut", "--input", str(path))
        assert res.exit_code == 2
        assert "error: DesignSyntaxError:" in res.output

    def test_zero_denominator(self):
        """Test a zero denominator in a vector exits 2."""
        res = invoke("product", "--builtin", "o1_7", "--a", "1/0*s1", "--b", "s2")
        assert res.exit_code == 2
        assert "error: DesignSyntaxError:" in res.output


class TestCheckAllCommand:
    """Tests for `steiner check-all` and `steiner models`."""

    def test_tables_section(self):
        """Test the tables section passes."""
        res = invoke("check-all", "--only", "tables")
        assert res.exit_code == 0
        assert res.stdout.splitlines()[-1] == "2/2 passed"

    def test_json(self):
        """Test the JSON suite report uses the pass key."""
        res = invoke("check-all", "--only", "tables", "-f", "json")
        payload = json.loads(res.stdout)
        assert payload["passed"] is True
        assert payload["checks"][0]["pass"] is True

    def test_unknown_section(self):
        """Test unknown sections exit 2."""
        res = invoke("check-all", "--only", "bogus")
        assert res.exit_code == 2
        assert "error: UnknownSection:" in res.output

    def test_tolerance_override(self):
        """Test --tol-* flags reach the suite sections."""
        assert invoke("check-all", "--only", "tables", "--tol-cesaro", "1e-6").exit_code == 0
        res = invoke("check-all", "--only", "spectral", "--tol-orth=-1")
        assert res.exit_code == 1
        assert "[spectral] zd7: block form of A_{s1+s5}: FAIL" in res.stdout

    def test_models(self):
        """Test the builtin list."""
        res = invoke("models", "-f", "json")
        names = [m["name"] for m in json.loads(res.stdout)]
        assert "o16_9" in names
        assert "rg7b" in names
