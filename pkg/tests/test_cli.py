import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from argmeter import fixtures as fx
from argmeter.cli import main
from argmeter.formats import render_instantiated, render_kb, render_tgf

DATA = Path(__file__).resolve().parents[1] / "src" / "argmeter" / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_measure_single(capsys):
    code, out, _ = run_cli(capsys, "measure", str(DATA / "hypertension.tgf"), "--measures", "in")
    assert code == 0
    assert json.loads(out) == {"in": "3/1"}


def test_measure_defaults_to_structure_suite(capsys):
    code, out, _ = run_cli(capsys, "measure", str(DATA / "query_demo.tgf"))
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "cc": "2/1",
        "dr": "1/1",
        "ic": "16/1",
        "in": "6/1",
        "wcc": "2/3",
        "win": "9/2",
        "wou": "9/2",
    }


def test_measure_full_report(capsys):
    code, out, _ = run_cli(
        capsys, "measure", str(DATA / "hypertension.tgf"), "--measures", "in,ust", "--full"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"] == "hypertension.tgf"
    assert payload["measures"] == {"in": "3/1", "ust": "0/1"}
    assert "elapsed_ms" in payload


def test_measure_table(capsys):
    code, out, _ = run_cli(
        capsys, "measure", str(DATA / "hypertension.tgf"), "--measures", "win", "--table"
    )
    assert code == 0
    assert "3/2" in out


def test_measure_unknown_measure(capsys):
    code, _, err = run_cli(capsys, "measure", str(DATA / "hypertension.tgf"), "--measures", "zzz")
    assert code == 1
    assert "zzz" in err


def test_measure_json_error_channel(capsys):
    code, _, err = run_cli(
        capsys, "--json", "measure", str(DATA / "hypertension.tgf"), "--measures", "zzz"
    )
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "ArgmeterError"


def test_semantics_grounded(capsys):
    code, out, _ = run_cli(capsys, "semantics", str(DATA / "hypertension.tgf"), "--kind", "gr")
    assert code == 0
    assert json.loads(out) == [["A1", "A3"]]


def test_semantics_preferred_apx(capsys):
    code, out, _ = run_cli(capsys, "semantics", str(DATA / "choice_pair.apx"), "--kind", "pr")
    assert code == 0
    assert json.loads(out) == [["A4"], ["A5"]]


def test_semantics_labellings(capsys):
    code, out, _ = run_cli(
        capsys, "semantics", str(DATA / "choice_pair.apx"), "--kind", "co", "--form", "labellings"
    )
    assert code == 0
    rows = json.loads(out)
    assert {"A4": "undec", "A5": "undec"} in rows
    assert len(rows) == 3


def test_mus(capsys):
    code, out, _ = run_cli(capsys, "mus", str(DATA / "contradiction.kb"))
    assert code == 0
    assert json.loads(out) == [["!a | !b", "a", "b"], ["!c", "!c -> !a", "a"]]


def test_dmeasure(capsys):
    code, out, _ = run_cli(capsys, "dmeasure", str(DATA / "graded_fan.inst"), "--measures", "cu")
    assert code == 0
    assert json.loads(out) == {"cu": "7/4"}


def test_dmeasure_all(capsys):
    code, out, _ = run_cli(capsys, "dmeasure", str(DATA / "graded_fan.inst"))
    assert code == 0
    payload = json.loads(out)
    assert payload["cu"] == "7/4"
    assert set(payload) == {"cu", "C_M", "C_#", "S_M", "S_#"}


def test_argtree(capsys):
    code, out, _ = run_cli(
        capsys, "argtree", str(DATA / "tree_demo.kb"), "--root", "a", "--variant", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["undercuts"] == 2
    assert payload["values"] == {"arg1": "2/3"}


def test_argtree_all_variants(capsys):
    code, out, _ = run_cli(capsys, "argtree", str(DATA / "tree_demo.kb"), "--root", "a")
    payload = json.loads(out)
    assert set(payload["values"]) == {"arg1", "arg2", "arg3"}


def test_properties_command(capsys):
    code, out, _ = run_cli(
        capsys, "properties", "--measure", "in", "--seed", "5", "--trials", "40"
    )
    assert code == 0
    assert "consistency+freeness" in out
    assert "monotonicity" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.tgf"
    bad.write_text("1\n#\n1 2\n")
    code, _, err = run_cli(capsys, "measure", str(bad))
    assert code == 1
    assert "error" in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "measure", "no_such_file.tgf")
    assert code == 1


def test_usage_error_is_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["semantics", "x.tgf", "--kind", "bogus"])
    assert err.value.code == 2


def test_resolve_repl(monkeypatch, capsys):
    script = "recommend in\nanswer A3 in\nstate\nundo\nquit\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(script))
    code, out, _ = run_cli(capsys, "resolve", str(DATA / "query_demo.tgf"))
    assert code == 0
    assert "recommended query: A3" in out
    assert "A3:in" in out
    assert "all arguments committed." in out  # answering A3 settles everything


def test_resolve_repl_error_handling(monkeypatch, capsys):
    script = "answer A9 in\nanswer A3 maybe\nnonsense\nundo\nquit\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(script))
    code, out, _ = run_cli(capsys, "resolve", str(DATA / "query_demo.tgf"))
    assert code == 0
    assert "unknown argument" in out
    assert "usage: answer" in out
    assert "unknown command" in out
    assert "nothing to undo" in out


def test_resolve_needs_file_or_serve(capsys):
    code, _, err = run_cli(capsys, "resolve")
    assert code == 1
    assert "graph file" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "argmeter", "measure", str(DATA / "hypertension.tgf"), "--measures", "in"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout) == {"in": "3/1"}


def test_cli_output_is_deterministic(tmp_path, capsys):
    path = tmp_path / "g.tgf"
    path.write_text(render_tgf(fx.query_demo_graph()))
    first = run_cli(capsys, "measure", str(path))
    second = run_cli(capsys, "measure", str(path))
    assert first == second


def test_measure_with_explicit_format(tmp_path, capsys):
    path = tmp_path / "noext"
    path.write_text("arg(a). arg(b). att(a,b).")
    code, out, _ = run_cli(capsys, "measure", str(path), "--format", "apx", "--measures", "in")
    assert code == 0
    assert json.loads(out) == {"in": "1/1"}


def test_tgf_error_carries_column(tmp_path, capsys):
    path = tmp_path / "bad.tgf"
    path.write_text("1\n#\n1 2\n")
    code, _, err = run_cli(capsys, "measure", str(path))
    assert code == 1
    assert "column 3" in err
