import json

import pytest
from click.testing import CliRunner

from enorbits.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return {
        "j21": write(
            "j21.json",
            {"field": "Q", "entries": [[0, 1, 0], [0, 0, 0], [0, 0, 0]]},
        ),
        "e3": write("e3.json", {"field": "Q", "entries": [[0, 0, 1]]}),
        "zero3": write(
            "zero3.json",
            {"field": "Q", "entries": [[0, 0, 0], [0, 0, 0], [0, 0, 0]]},
        ),
        "zerovec3": write("zv3.json", {"field": "Q", "entries": [[0, 0, 0]]}),
        "e12": write("e12.json", {"field": "Q", "entries": [[0, 1], [0, 0]]}),
        "identity": write(
            "id.json", {"field": "Q", "entries": [[1, 0], [0, 1]]}
        ),
        "badjson": str(tmp_path / "missing.json"),
    }


class TestOrbits:
    def test_row_counts(self, runner):
        for n, rows in [(1, 2), (2, 4), (3, 7), (4, 12)]:
            result = runner.invoke(main, ["orbits", "--n", str(n)])
            assert result.exit_code == 0
            assert len(result.output.strip().splitlines()) == rows + 1

    def test_records_format(self, runner):
        result = runner.invoke(
            main, ["orbits", "--n", "2", "--format", "records"]
        )
        assert result.exit_code == 0
        assert "type: 2[0]" in result.output
        assert "dim_enhanced: 4" in result.output

    def test_out_of_range(self, runner):
        assert runner.invoke(main, ["orbits", "--n", "13"]).exit_code == 2
        assert runner.invoke(main, ["orbits", "--n", "0"]).exit_code == 2

    def test_deterministic(self, runner):
        a = runner.invoke(main, ["orbits", "--n", "4"]).output
        b = runner.invoke(main, ["orbits", "--n", "4"]).output
        assert a == b


class TestHasse:
    def test_n2_golden(self, runner):
        result = runner.invoke(main, ["hasse", "--n", "2"])
        assert result.exit_code == 0
        assert result.output == (
            "digraph hasse {\n"
            '  "2[0]" [label="2[0]\\ndim 4"];\n'
            '  "2[1]" [label="2[1]\\ndim 3"];\n'
            '  "1,1[0]" [label="1,1[0]\\ndim 2"];\n'
            '  "1,1[2]" [label="1,1[2]\\ndim 0"];\n'
            '  "2[0]" -> "2[1]";\n'
            '  "2[1]" -> "1,1[0]";\n'
            '  "1,1[0]" -> "1,1[2]";\n'
            "}\n"
        )

    def test_n1(self, runner):
        out = runner.invoke(main, ["hasse", "--n", "1"]).output
        assert out.count("[label=") == 2
        assert out.count("->") == 1

    def test_n4_node_count(self, runner):
        out = runner.invoke(main, ["hasse", "--n", "4"]).output
        assert out.count("[label=") == 12

    def test_out_of_range(self, runner):
        assert runner.invoke(main, ["hasse", "--n", "11"]).exit_code == 2


class TestClassify:
    def test_basic(self, runner, files):
        result = runner.invoke(
            main,
            ["classify", "--matrix", files["j21"], "--vector", files["e3"]],
        )
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "type: 2,1[1]"

    def test_check_flag(self, runner, files):
        result = runner.invoke(
            main,
            [
                "classify",
                "--matrix",
                files["j21"],
                "--vector",
                files["e3"],
                "--check",
            ],
        )
        assert result.exit_code == 0

    def test_zero_pair(self, runner, files):
        result = runner.invoke(
            main,
            [
                "classify",
                "--matrix",
                files["zero3"],
                "--vector",
                files["zerovec3"],
            ],
        )
        assert result.output.splitlines()[0] == "type: 1,1,1[3]"

    def test_not_nilpotent(self, runner, files):
        result = runner.invoke(
            main,
            [
                "classify",
                "--matrix",
                files["identity"],
                "--vector",
                files["e3"],
            ],
        )
        assert result.exit_code == 2
        assert "not nilpotent" in result.output

    def test_missing_file(self, runner, files):
        result = runner.invoke(
            main,
            ["classify", "--matrix", files["badjson"], "--vector", files["e3"]],
        )
        assert result.exit_code == 2


class TestClosureAndFlag:
    def test_label_pair(self, runner):
        result = runner.invoke(
            main, ["closure-test", "--upper", "2,1[0]", "--lower", "1,1,1[3]"]
        )
        assert result.exit_code == 0
        assert "contains: true" in result.output

    def test_element(self, runner, files):
        result = runner.invoke(
            main,
            [
                "closure-test",
                "--upper",
                "2,1[2]",
                "--matrix",
                files["j21"],
                "--vector",
                files["e3"],
            ],
        )
        assert "contains: false" in result.output

    def test_missing_candidate(self, runner):
        assert (
            runner.invoke(main, ["closure-test", "--upper", "2[0]"]).exit_code
            == 2
        )

    def test_flag(self, runner):
        result = runner.invoke(main, ["flag", "2,1[1]"])
        assert result.exit_code == 0
        assert "flag_dims: 2,3" in result.output
        assert "flag_blocks: 2,1" in result.output

    def test_flag_bad_label(self, runner):
        assert runner.invoke(main, ["flag", "2,2[1]"]).exit_code == 2


class TestGl2:
    def test_classify(self, runner, files):
        result = runner.invoke(
            main, ["gl2", "classify", "--matrix", files["e12"], "--w", "0,0,1"]
        )
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "O5"

    def test_dims(self, runner):
        result = runner.invoke(main, ["gl2", "dims"])
        assert result.exit_code == 0
        assert "O4     4    3" in result.output

    def test_poset(self, runner):
        result = runner.invoke(main, ["gl2", "poset"])
        assert "O4: O1,O4" in result.output

    def test_bad_vector(self, runner, files):
        result = runner.invoke(
            main, ["gl2", "classify", "--matrix", files["e12"], "--w", "1,2"]
        )
        assert result.exit_code == 2


class TestFiniteness:
    def test_examples(self, runner):
        cases = [
            (["finiteness", "--n", "3", "--weight", "1,0,0"], "Finite"),
            (["finiteness", "--n", "2", "--weight", "3,0"], "Infinite"),
            (
                ["finiteness", "--n", "2", "--weight", "2,0", "--variety", "gl"],
                "Infinite",
            ),
            (
                [
                    "finiteness",
                    "--n",
                    "2",
                    "--weight",
                    "2,0",
                    "--variety",
                    "enhanced",
                ],
                "Finite",
            ),
        ]
        for args, expected in cases:
            result = runner.invoke(main, args)
            assert result.exit_code == 0
            assert result.output.strip() == expected

    def test_not_dominant(self, runner):
        result = runner.invoke(main, ["finiteness", "--n", "2", "--weight", "0,1"])
        assert result.exit_code == 2


class TestOracle:
    def test_census_n2(self, runner):
        result = runner.invoke(main, ["oracle", "census", "--n", "2", "--p", "2"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "4 orbits"
        assert "count_matches: true" in result.output

    def test_census_csv(self, runner):
        result = runner.invoke(
            main,
            ["oracle", "census", "--n", "2", "--p", "2", "--format", "csv"],
        )
        assert "type,orbit_size,stabilizer_order,representative" in result.output

    def test_census_deterministic(self, runner):
        args = ["oracle", "census", "--n", "2", "--p", "3", "--format", "csv"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_census_rejects(self, runner):
        assert (
            runner.invoke(
                main, ["oracle", "census", "--n", "4", "--p", "3"]
            ).exit_code
            == 2
        )

    def test_enhanced_numbers_n2(self, runner):
        result = runner.invoke(main, ["oracle", "enhanced-numbers", "--n", "2"])
        assert result.exit_code == 0
        assert "agreement: true" in result.output

    def test_enhanced_numbers_rejects_p3(self, runner):
        result = runner.invoke(
            main, ["oracle", "enhanced-numbers", "--n", "2", "--p", "3"]
        )
        assert result.exit_code == 2
