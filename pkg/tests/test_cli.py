import json
import subprocess
import sys

import pytest

from lclaw.cli import main
from lclaw.graph import Graph, chair, claw, cycle, disjoint_union
from lclaw.instances import Instance, emit_dimacs, parse_dimacs, parse_family


def write(tmp_path, name, g, w=None):
    path = tmp_path / name
    path.write_text(emit_dimacs(Instance(g, tuple(w or [1] * g.n))))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_k2(tmp_path, capsys):
    path = tmp_path / "k2.col"
    path.write_text("p edge 2 1\ne 1 2\n")
    code, out, _ = run(capsys, "solve", str(path))
    weight, ids = out.splitlines()
    assert code == 0 and weight == "1" and len(ids.split()) == 1


def test_solve_auto_l_on_chair(tmp_path, capsys):
    path = write(tmp_path, "chair.col", chair())
    code, out, _ = run(capsys, "solve", path, "--l", "auto", "--json")
    data = json.loads(out)
    assert code == 0 and data["l"] == 2 and data["weight"] == 3
    assert min(data["vertices"]) >= 1


@pytest.mark.parametrize("solver", ["auto", "bnb", "brute"])
def test_solve_solvers_and_orderings(tmp_path, capsys, solver):
    path = write(tmp_path, "c7.col", cycle(7), [4, 1, 5, 9, 2, 6, 5])
    for ordering in ("input", "degasc", "degdesc"):
        code, out, _ = run(capsys, "solve", path, "--l", "2", "--solver", solver, "--ordering", ordering)
        assert code == 0 and out.splitlines()[0] == "19"


def test_verify_claw_free_instance(tmp_path, capsys):
    path = write(tmp_path, "c5.col", cycle(5))
    code, out, _ = run(capsys, "verify", path, "--l", "2")
    assert code == 0
    assert "members 1 <= cap" in out and out.rstrip().endswith("status: pass")


def test_family_dump_and_verify_dump(tmp_path, capsys):
    g = disjoint_union(claw(), cycle(4))
    path = write(tmp_path, "g.col", g)
    code, out, _ = run(capsys, "family", path, "--l", "2")
    assert code == 0 and out.startswith("# family gamma l=2")
    dump = tmp_path / "fam.txt"
    dump.write_text(out)
    assert len(parse_family(out)) > 1
    code, out, _ = run(capsys, "verify", path, "--l", "2", "--family", str(dump))
    assert code == 0
    # a family missing the claw center's side does not cover everything
    dump.write_text("# family gamma\n# base\n2 3 4 5 6 7 8\n")
    code, out, _ = run(capsys, "verify", path, "--l", "2", "--family", str(dump))
    assert code == 4 and "status: fail" in out


def test_family_alpha(tmp_path, capsys):
    path = write(tmp_path, "c4.col", cycle(4))
    code, out, _ = run(capsys, "family", path, "--alpha")
    assert code == 0 and out.startswith("# family alpha\n")
    code, out, _ = run(capsys, "verify", path, "--alpha")
    assert code == 0


def test_gen_writes_parseable_instance(tmp_path, capsys):
    out_path = tmp_path / "gen.col"
    code, _, _ = run(capsys, "gen", "lclaw", "--seed", "3", "--n", "12", "--weights=-5,20", "-o", str(out_path))
    assert code == 0
    inst = parse_dimacs(out_path.read_text())
    assert inst.graph.n == 12 and inst.tag == "lclaw(2)"
    code, out, _ = run(capsys, "gen", "2k2", "--seed", "1", "--n", "8")
    assert code == 0 and parse_dimacs(out).tag == "2k2free"


def test_bench_is_deterministic(capsys):
    args = ("bench", "--sizes", "8,10", "--trials", "2", "--no-timing")
    code, first, _ = run(capsys, *args)
    assert code == 0 and "cap_ok" in first
    _, second, _ = run(capsys, *args)
    assert first == second


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "L14:" in out


def test_exit_codes(tmp_path, capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "solve")[0] == 1
    assert run(capsys, "solve", "x.col", "--l", "0")[0] == 1
    assert run(capsys, "bench", "--sizes", "a,b")[0] == 1
    assert run(capsys, "solve", str(tmp_path / "missing.col"))[0] == 2
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2 and "line 2" in err
    two = write(tmp_path, "two.col", disjoint_union(claw(), claw()))
    code, _, err = run(capsys, "solve", two, "--l", "2")
    assert code == 3 and "claws" in err
    code, _, _ = run(capsys, "solve", two, "--l", "2", "--skip-class-check")
    assert code == 3
    code, _, _ = run(capsys, "solve", write(tmp_path, "claw.col", claw()), "--l", "1")
    assert code == 3


def test_matching_mode_on_non_line_graph(tmp_path, capsys):
    k5e = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])
    code, _, err = run(capsys, "solve", write(tmp_path, "k5e.col", k5e), "--solver", "matching")
    assert code == 1 and "not a line graph" in err


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "c5.col", cycle(5))
    res = subprocess.run([sys.executable, "-m", "lclaw.cli", "solve", path], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "2"
