import json

import pytest

from relalg.algebra import from_json, to_json
from relalg.catalog import m3
from relalg.cli import _parse_axiom_list, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestAxiomListParsing:
    def test_ranges(self):
        assert _parse_axiom_list("R1,R3-R10") == \
            ["R1"] + [f"R{n}" for n in range(3, 11)]

    def test_named_ids_pass_through(self):
        assert _parse_axiom_list("R8p,monL") == ["R8p", "monL"]

    def test_empty(self):
        assert _parse_axiom_list("") == []


class TestCommands:
    def test_list_models(self, capsys):
        code, out, _ = run(capsys, "list-models")
        assert code == 0
        assert "m3" in out.split()
        assert "a9" in out.split()

    def test_show_ascii(self, capsys):
        code, out, _ = run(capsys, "show", "m3")
        assert code == 0
        assert "0' : 0 0' 1 1" in out

    def test_show_json(self, capsys):
        code, out, _ = run(capsys, "show", "m3", "--json")
        assert code == 0
        assert from_json(out) == m3()

    def test_check_pass_and_fail_exit_codes(self, capsys):
        code, out, _ = run(capsys, "check", "m3")
        assert code == 0
        code, out, _ = run(capsys, "check", "a2")
        assert code == 1
        assert "FAIL R2" in out

    def test_check_json(self, capsys):
        code, out, _ = run(capsys, "check", "a2", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["failing"] == ["R2"]
        assert doc["axioms"]["R2"] == {"r": "1'", "s": "1'", "t": "1"}

    def test_check_system_choice(self, capsys):
        code, out, _ = run(capsys, "check", "b9", "--system", "s")
        assert code == 1
        assert "FAIL R8 " in out

    def test_eval(self, capsys):
        code, out, _ = run(capsys, "eval", "d", "r;s^", "--let", "r=a,s=b")
        assert code == 0
        assert out.strip() == "0'"

    def test_eval_by_index(self, capsys):
        code, out, _ = run(capsys, "eval", "m3", "r+s", "--let", "r=1,s=2")
        assert code == 0
        assert out.strip() == "1"

    def test_eval_errors(self, capsys):
        code, _, err = run(capsys, "eval", "m3", "r;s", "--let", "r=1")
        assert code == 2 and "unbound" in err
        code, _, err = run(capsys, "eval", "m3", "r;;s", "--let", "r=1,s=1")
        assert code == 2
        code, _, err = run(capsys, "eval", "m3", "r", "--let", "r=9")
        assert code == 2

    def test_independence(self, capsys):
        code, out, _ = run(capsys, "independence", "a2", "--target", "R2")
        assert code == 0
        code, out, _ = run(capsys, "independence", "m3", "--target", "R2")
        assert code == 1
        code, _, err = run(capsys, "independence", "a2", "--target", "R8p")
        assert code == 2

    def test_search(self, capsys):
        code, out, _ = run(capsys, "search", "--size", "2",
                           "--hold", "R1,R3-R10", "--fail", "R2", "--iso")
        assert code == 0
        assert "labeled models: 0" in out

    def test_search_json(self, capsys):
        code, out, _ = run(capsys, "search", "--size", "1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["labeled_count"] == 1
        assert doc["models"][0]["size"] == 1

    def test_unknown_model(self, capsys):
        code, _, err = run(capsys, "show", "nope")
        assert code == 2
        assert "error" in err

    def test_model_file_round_trip(self, tmp_path, capsys):
        path = tmp_path / "model.json"
        path.write_text(to_json(m3()))
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as e:
            main(["search"])  # --size is required
        assert e.value.code == 2
