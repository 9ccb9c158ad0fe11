import json

from numsem.cli import main

VARIETY_GOLDEN = "<1>\n<2,3>\n<2,5>\n<3,4,5>\n<3,5,7>\n<4,5,6,7>\n<5,6,7,8,9>\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGoldenOutputs:
    def test_variety(self, capsys):
        code, out, _ = run(capsys, "variety", "2,5", "3,5,7")
        assert code == 0
        assert out == VARIETY_GOLDEN

    def test_extensions(self, capsys):
        code, out, _ = run(capsys, "extensions", "3,5,7")
        assert (code, out) == (0, "<1>\n<2,3>\n<3,4,5>\n<3,5,7>\n")

    def test_upper_sets(self, capsys):
        code, out, _ = run(capsys, "upper-sets", "4,5,11", "--modulus", "5")
        assert code == 0
        assert out == "{3,6,7}\n{3,7}\n{6}\n{6,7}\n{7}\n"

    def test_tree_dot_single_edge(self, capsys):
        code, out, _ = run(capsys, "tree", "--frobenius-bound", "1", "--format", "dot")
        assert code == 0
        assert out == 'digraph variety_tree {\n  "<1>";\n  "<2,3>";\n  "<1>" -> "<2,3>";\n}\n'

    def test_tree_dot_depth_two(self, capsys):
        code, out, _ = run(capsys, "tree", "--frobenius-bound", "5", "--depth", "2", "--format", "dot")
        assert code == 0
        lines = out.splitlines()
        assert sum(1 for l in lines if l.endswith('";') and "->" not in l) == 11
        assert sum(1 for l in lines if "->" in l) == 10

    def test_tree_text_indentation(self, capsys):
        _, out, _ = run(capsys, "tree", "--frobenius-bound", "3")
        assert out == "<1>\n  <2,3>\n    <3,4,5>\n    <4,5,6,7>\n  <2,5>\n"

    def test_doubles_lines(self, capsys):
        code, out, _ = run(capsys, "doubles", "4,5,11", "--frobenius-bound", "15")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 18
        assert "S(5; 3,6,7) = <5,8,11,17> F=14" in lines
        assert "S(9; 6,7) = <8,9,10,21,22,23> F=15" in lines

    def test_double_with_empty_upper_set(self, capsys):
        code, out, _ = run(capsys, "double", "2,3", "--modulus", "3")
        assert (code, out) == (0, "S(3; ) = <3,4> F=5\n")

    def test_info_text(self, capsys):
        _, out, _ = run(capsys, "info", "4,5,11")
        assert out == "<4,5,11> F=7 m=4 g=5 e=3 depth=2 gaps=1,2,3,6,7\n"

    def test_info_json(self, capsys):
        _, out, _ = run(capsys, "info", "2,5", "--format", "json")
        assert json.loads(out) == {
            "generators": [2, 5],
            "gaps": [1, 3],
            "frobenius": 3,
            "genus": 2,
            "multiplicity": 2,
            "depth": 2,
        }

    def test_quotient_and_pm_and_intersect(self, capsys):
        assert run(capsys, "quotient", "3,5,7", "2")[1] == "<3,4,5>\n"
        assert run(capsys, "pm", "3", "7", "1")[1] == "<3,5,7>\n"
        assert run(capsys, "intersect", "2,5", "3,5,7")[1] == "<5,6,7,8,9>\n"

    def test_fundamental_gaps(self, capsys):
        assert run(capsys, "fundamental-gaps", "5,7,9")[1] == "6,8,11,13\n"
        assert run(capsys, "fundamental-gaps", "1")[1] == "\n"

    def test_is_extension(self, capsys):
        assert run(capsys, "is-extension", "2,5", "2,3") == (0, "true\n", "")
        assert run(capsys, "is-extension", "3,5,7", "2,5") == (0, "false\n", "")

    def test_hull(self, capsys):
        assert run(capsys, "hull", "5,7,9", "--elements", "6")[1] == "<5,6,7,8,9>\n"

    def test_enumerate_all(self, capsys):
        code, out, _ = run(capsys, "enumerate-all", "--frobenius-bound", "5")
        assert code == 0
        assert len(out.splitlines()) == 12

    def test_variety_json(self, capsys):
        _, out, _ = run(capsys, "variety", "2,5", "--format", "json")
        data = json.loads(out)
        assert [m["generators"] for m in data["members"]] == [[1], [2, 3], [2, 5]]


class TestDeterminismAndOutput:
    def test_repeat_runs_identical(self, capsys):
        _, first, _ = run(capsys, "variety", "2,5", "3,5,7")
        _, second, _ = run(capsys, "variety", "2,5", "3,5,7")
        assert first == second

    def test_output_file_byte_identical(self, capsys, tmp_path):
        _, stdout_text, _ = run(capsys, "tree", "--frobenius-bound", "5", "--format", "json")
        target = tmp_path / "tree.json"
        code, out, _ = run(
            capsys, "tree", "--frobenius-bound", "5", "--format", "json",
            "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == stdout_text


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        code, out, err = run(capsys, "info", "4,6")
        assert code == 1
        assert out == ""
        assert "GcdNotOne" in err

    def test_unknown_verb_is_two(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_required_flag_is_two(self, capsys):
        assert run(capsys, "upper-sets", "4,5,11")[0] == 2

    def test_bad_generator_string_is_two(self, capsys):
        assert run(capsys, "info", "2,x")[0] == 2
        assert run(capsys, "info", "0,3")[0] == 2

    def test_dot_format_only_for_tree(self, capsys):
        assert run(capsys, "info", "2,5", "--format", "dot")[0] == 2

    def test_bad_modulus_is_domain_error(self, capsys):
        code, _, err = run(capsys, "upper-sets", "4,5,11", "--modulus", "4")
        assert code == 1
        assert "BadM" in err

    def test_oracle_check_passes(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--frobenius-bound", "12")
        assert code == 0
        assert out.endswith("oracle-check: PASS\n")
