import json
import shutil
import subprocess
from pathlib import Path

import jsonschema
import pytest

from kitefree_chroma import report as rep
from kitefree_chroma.cli import main
from kitefree_chroma.coloring import REGISTRY
from kitefree_chroma.formats import from_graph6, to_edgelist, to_graph6
from kitefree_chroma.generators import tight_example
from kitefree_chroma.graph import antihole, complete_graph, join, path_graph
from kitefree_chroma.oracle import check_coloring

CORPUS = Path(__file__).parent / "data" / "corpus.g6"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out.out)


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return write


def test_color_tight_apex(capsys, files):
    g = tight_example(2, plus_k1=True)
    code, report = run_json(capsys, "color", "--t", 6, files("t.txt", to_edgelist(g)))
    assert code == 0 == report["exit_code"]
    inst = report["instances"][0]
    assert inst["result"]["used"] == 7
    # re-verify independently of the report's own verification block
    assert check_coloring(g, inst["result"]["colors"], 7) is None
    assert inst["verification"] == {"proper_within_budget": True, "trace_root_to_leaf": True,
                                    "oracle_chi": 7, "not_below_chi": True}
    assert all(tag in REGISTRY for tag in inst["case_trace"])


def test_color_t7_on_three_factors(capsys, files):
    code, report = run_json(capsys, "color", "--t", 7, files("t.g6", to_graph6(tight_example(3))))
    assert code == 0
    assert report["instances"][0]["result"]["used"] <= 9


def test_color_refuses_p5(capsys, files):
    code, report = run_json(capsys, "color", files("p.txt", to_edgelist(path_graph(5))))
    assert code == 3
    err = report["instances"][0]["error"]
    assert err["kind"] == "OutOfClass" and len(err["witness"]) == 4
    assert err["class_report"]["violations"][0]["pattern"] == "2K2"


def test_color_force_reports_soundness_error(capsys, files):
    code, report = run_json(capsys, "color", "--force", files("k.g6", to_graph6(complete_graph(8))))
    assert code == 4
    assert report["instances"][0]["error"]["kind"] in {"OutOfClass", "CaseExhausted",
                                                       "PartitionIncomplete", "StableSetViolated"}


def test_multi_graph_input_takes_worst_status(capsys, files):
    text = to_graph6(antihole(5)) + "\n" + to_graph6(path_graph(5)) + "\n"
    code, report = run_json(capsys, "color", files("two.g6", text))
    assert code == 3
    assert [i["exit_code"] for i in report["instances"]] == [0, 3]


@pytest.mark.parametrize("name, text, fmt", [
    ("bad.g6", "not graph6\n", None), ("bad.col", "p edge x\n", None), ("x.json", "{}", None),
    ("empty.g6", "", None), ("ok.g6", "Bw\n", "dimacs"),
])
def test_parse_errors(capsys, files, name, text, fmt):
    argv = ["color", files(name, text)] + (["--format", fmt] if fmt else [])
    code, report = run_json(capsys, *argv)
    assert code == 2 == report["exit_code"]
    assert report["error"]["kind"] == "ParseError"
    assert report["input_digest"] == rep.digest(text.encode())


def test_missing_file_and_bad_flags(capsys, tmp_path):
    assert main(["color", str(tmp_path / "nope.g6")]) == 2
    assert main(["color", "--t", "5", str(tmp_path / "nope.g6")]) == 2
    assert main(["bogus"]) == 2
    assert main(["check", "--class", "nope", str(tmp_path / "x.g6")]) == 2


def test_check_examples(capsys, files):
    from kitefree_chroma.detect import get_pattern
    code, report = run_json(capsys, "check", "--class", "P5kite",
                            files("kite.g6", to_graph6(get_pattern("kite").template)))
    res = report["instances"][0]["result"]
    assert code == 0 and not res["member"] and len(res["violations"][0]["map"]) == 5
    assert report["instances"][0]["verification"]["witnesses_verified"]
    _, report = run_json(capsys, "check", files("c5.g6", to_graph6(antihole(5))))
    assert report["instances"][0]["result"]["member"]
    _, report = run_json(capsys, "check", "--class", "c5free2K2K5", files("c9.g6", to_graph6(antihole(9))))
    assert report["instances"][0]["result"]["member"]


@pytest.mark.parametrize("g, chi, omega", [
    (antihole(5), 3, 2), (join(antihole(5), antihole(5)), 6, 4), (complete_graph(6), 6, 6),
])
def test_oracle_examples(capsys, files, g, chi, omega):
    code, report = run_json(capsys, "oracle", files("g.g6", to_graph6(g)))
    res = report["instances"][0]["result"]
    assert code == 0 and (res["chi"], res["omega"]) == (chi, omega)
    assert all(report["instances"][0]["verification"].values())


def test_oracle_bound_exit(capsys, files):
    code, report = run_json(capsys, "oracle", "--oracle-bound", 4, files("g.g6", to_graph6(antihole(5))))
    assert code == 5 and report["instances"][0]["error"]["kind"] == "OracleBound"


def test_fuzz_is_deterministic(capsys, tmp_path):
    argv = ["fuzz", "--seed", 7, "--budget", 120, "--max-n", 9]
    code1, out1 = run(capsys, *argv, "--json")
    code2, out2 = run(capsys, *argv, "--json", "--workers", 2, "--out", tmp_path / "f.json")
    assert code1 == code2 == 0
    assert out1.out == out2.out == (tmp_path / "f.json").read_text()
    report = json.loads(out1.out)
    assert report["violations"] == [] and report["max_colors"] <= 7


def test_fuzz_conjecture_mode(capsys):
    code, report = run_json(capsys, "fuzz", "--mode", "conjecture", "--seed", 11, "--budget", 120,
                            "--max-n", 8)
    assert code == 0 and report["violations"] == []
    assert sum(report["omega_histogram"].values()) == report["sampled"]
    assert report["branch_histogram"] == {}


def test_fuzz_rejects_bad_class(capsys):
    assert main(["fuzz", "--class", "P5kite"]) == 2


@pytest.mark.parametrize("argv, count, n", [
    (["tight", "--n", 2, "--apex"], 1, 11),
    (["c5_blowup", "--sizes", "2,2,2,2,2"], 1, 10),
    (["exhaustive", "--n", 4], None, 4),
    (["random_class", "--n", 8, "--seed", 3], 1, 8),
])
def test_gen(capsys, argv, count, n):
    code, out = run(capsys, "gen", *argv)
    lines = out.out.split()
    assert code == 0
    assert all(from_graph6(line).n == n for line in lines)
    if count is not None:
        assert len(lines) == count
    code2, out2 = run(capsys, "gen", *argv)
    assert out2.out == out.out


def test_gen_exhaustive_count_matches_enumerator(capsys):
    from kitefree_chroma.generators import enumerate_small
    _, out = run(capsys, "gen", "exhaustive", "--n", 4)
    assert len(out.out.split()) == len(list(enumerate_small(4, "main2K2K6")))


def test_gen_invalid_spec(capsys):
    assert main(["gen", "tight"]) == 2
    assert main(["gen", "c5_blowup", "--sizes", "1,2"]) == 2
    assert main(["gen", "c5_blowup", "--sizes", "a,b"]) == 2
    assert main(["gen", "exhaustive", "--n", "9"]) == 2


def test_audit_command(capsys):
    code, report = run_json(capsys, "audit", CORPUS)
    assert code == 0 and report["failures"] == []
    assert set(report["uncovered"]) <= set(REGISTRY)


def test_reports_validate_against_schema(capsys, files):
    _, report = run_json(capsys, "color", files("a.g6", to_graph6(antihole(7))))
    jsonschema.validate(report, rep.RUN_SCHEMA)
    bad = dict(report, schema="report_v0")
    with pytest.raises(jsonschema.ValidationError):
        rep.validate(bad)
    bad = json.loads(json.dumps(report))
    bad["instances"][0]["case_trace"] = ["not:a:tag"]
    with pytest.raises(jsonschema.ValidationError):
        rep.validate(bad)


@pytest.mark.skipif(shutil.which("kitefree-chroma") is None, reason="console script not installed")
def test_console_script_round_trip(tmp_path):
    p = tmp_path / "t.g6"
    p.write_text(to_graph6(tight_example(2, plus_k1=True)) + "\n")
    proc = subprocess.run(["kitefree-chroma", "color", str(p)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "colors=7/7" in proc.stdout
