import json
import subprocess
import sys

import pytest

from skewzigzag import catalog
from skewzigzag.cli import main

KITE = "V={a,b,c,d}, E={ab, ad, dc, bc, bd}"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


@pytest.fixture
def files(tmp_path):
    kite = tmp_path / "kite.txt"
    kite.write_text(KITE)
    fam = tmp_path / "kite_v.json"
    fam.write_text(json.dumps(catalog.kite_family().to_json(nontrivial_only=True)))
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps(catalog.triangle().to_json()))
    return tmp_path, str(kite), str(fam), str(tri)


def test_paper_example(capsys):
    code, out = run(capsys, "paper-example")
    assert code == 0
    assert [out[k] for k in ("path_P1", "path_P2", "path_P1P2",
                             "cycle_P1", "cycle_P2", "cycle_P1P2")] == \
        ["14", "5/14", "1", "2", "1/2", "1"]


def test_graph_info_and_dot(capsys, files):
    _, kite, _, _ = files
    code, out = run(capsys, "graph-info", "--graph", kite)
    assert code == 0 and out["automorphisms"] == 4 and not out["bipartite"]
    code, out = run(capsys, "graph-dot", "--graph", kite, "--double")
    assert code == 0 and out.count("->") == 10


def test_coefficient_round_trips(capsys, files):
    tmp, kite, fam, _ = files
    code, validated = run(capsys, "coeffs-validate", "--graph", kite, "--coeffs", fam)
    assert code == 0
    again = tmp / "validated.json"
    again.write_text(json.dumps(validated))
    code, cls = run(capsys, "coeffs-class", "--graph", kite, "--coeffs", str(again))
    assert [row["value"] for row in cls["class"]] == ["1/2", "1"]
    cls_file = tmp / "class.json"
    cls_file.write_text(json.dumps(cls))
    code, rebuilt = run(capsys, "coeffs-from-class", "--graph", kite, "--class", str(cls_file))
    assert code == 0
    rebuilt_file = tmp / "rebuilt.json"
    rebuilt_file.write_text(json.dumps(rebuilt))
    code, verdict = run(capsys, "classify-equiv", "--graph", kite,
                        "--left", fam, "--right", str(rebuilt_file))
    assert verdict["equivalent"] and verdict["verified"]


def test_algebra_commands(capsys, files):
    tmp, kite, fam, _ = files
    csv = tmp / "table.csv"
    code, out = run(capsys, "algebra-build", "--graph", kite, "--coeffs", fam,
                    "--table-csv", str(csv))
    assert code == 0 and out["dim"] == 18
    assert csv.read_text().startswith("left,right,product,coefficient")
    code, prod = run(capsys, "algebra-mul", "--graph", kite, "--coeffs", fam,
                     "--left", "[d|b]", "--right", "[b|d]")
    assert prod == {"coords": {"[d|a|d]": "7/5"}}
    elem = tmp / "elem.json"
    elem.write_text(json.dumps(prod))
    code, zero = run(capsys, "algebra-mul", "--graph", kite, "--coeffs", fam,
                     "--left", str(elem), "--right", "[d|a]")
    assert zero == {"coords": {}}
    code, gram = run(capsys, "algebra-gram", "--graph", kite, "--coeffs", fam)
    assert gram["report"]["nondegenerate"] and not gram["report"]["symmetric"]


def test_single_vertex_dimension(capsys, tmp_path):
    g = tmp_path / "one.txt"
    g.write_text("V={a}, E={}")
    code, out = run(capsys, "algebra-build", "--graph", str(g))
    assert code == 0 and out["dim"] == 2 and out["basis"] == ["1", "X"]


def test_classify_and_orientation(capsys, files):
    tmp, kite, fam, tri = files
    code, out = run(capsys, "classify-iso", "--graph", kite, "--left", fam, "--right", "ones")
    assert out["verdict"] == "not-isomorphic"
    assert out["obstruction"]["cycle"] == ["d", "a", "b", "d"]
    orient = tmp / "orient.json"
    orient.write_text(json.dumps({"orientation": [["a", "b"], ["b", "c"], ["c", "a"]]}))
    code, induced = run(capsys, "orientation-induce", "--graph", tri, "--orientation", str(orient))
    assert code == 0
    induced_file = tmp / "induced.json"
    induced_file.write_text(json.dumps(induced))
    code, out = run(capsys, "classify-iso", "--graph", tri,
                    "--left", str(induced_file), "--right", f"orientation:{orient}")
    assert out["verdict"] == "equivalent" and out["verified"]
    code, out = run(capsys, "classify-iso", "--graph", tri,
                    "--left", "ones", "--right", f"orientation:{orient}")
    assert out["verdict"] == "not-isomorphic"
    code, out = run(capsys, "obstruction-check", "--graph", tri)
    assert out["holds"] and out["isomorphic_to_zigzag"] == 0


def test_cycles_output(capsys, files):
    _, kite, _, _ = files
    code, out = run(capsys, "cycles", "--graph", kite)
    assert out["tree_edges"] == ["a-b", "a-d", "b-c"]


def test_output_flag(capsys, files):
    tmp, kite, _, _ = files
    dest = tmp / "out.json"
    assert main(["-o", str(dest), "cycles", "--graph", kite]) == 0
    assert json.loads(dest.read_text())["tree_edges"] == ["a-b", "a-d", "b-c"]


@pytest.mark.parametrize("argv, code", [
    (["cycles", "--graph", "missing.json"], "InputError"),
    (["coeffs-validate", "--graph", "{g}", "--coeffs", "{bad}"], "AxiomViolation"),
    (["algebra-mul", "--graph", "{g}", "--left", "[a|c]", "--right", "[a]"], "UnknownBasisElement"),
])
def test_domain_errors_exit_1(capsys, tmp_path, argv, code):
    g = tmp_path / "g.txt"
    g.write_text(KITE)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"values": [{"at": "b", "from": "a", "to": "a", "value": "2"}]}))
    argv = [a.format(g=g, bad=bad) for a in argv]
    status, out = run(capsys, *argv)
    assert status == 1 and out["error"] == code and out["detail"]


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["cycles"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewzigzag.cli", "paper-example"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["cycle_P2"] == "1/2"
