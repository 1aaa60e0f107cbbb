import csv
import io
import json
import subprocess
import sys

import pytest

from sidonkit.cli import main
from sidonkit.groups import ElementSet, build_group
from sidonkit.sidon import check_sk, check_sk_prime


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify", "--group", "S:3", "--set", "(1 2 3),(1 2)", "--prop", "sk", "--k", "2")
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["holds"] is True and rep["result"]["multiplicity"] == 1
    assert rep["seed"] == 0 and rep["version"] and rep["inputs"]["group"] == "S:3"
    assert "timestamp" not in out


def test_verify_violation_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--group", "Z:6", "--set", "0,1,2", "--k", "2")
    assert code == 1
    rep = json.loads(out)
    G = build_group(rep["inputs"]["group"])
    u, v = (tuple(w["indices"]) for w in rep["result"]["witness"])
    prod = lambda w: G.mul(w[0], w[1])  # noqa: E731
    assert u != v and prod(u) == prod(v)
    A = ElementSet.of(G, [m["index"] for m in rep["result"]["members"]])
    assert check_sk(G, A, 2).multiplicity == rep["result"]["multiplicity"]


def test_verify_sk_prime_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--group", "prod(Z:2,Z:2)", "--set", "[0; 0],[1; 0]", "--prop", "sk-prime")
    assert code == 1
    rep = json.loads(out)
    G = build_group("prod(Z:2,Z:2)")
    w = rep["result"]["witness"]["indices"]
    x = 0
    for i, c in enumerate(w):
        x = G.mul(x, G.inv(c) if i % 2 else c)
    assert x == 0
    assert not check_sk_prime(G, ElementSet.of(G, set(w)), 2).holds


def test_verify_g(capsys):
    code, out, _ = run(capsys, "verify", "--group", "Z:4", "--set", "0,1,2,3", "--g", "4")
    assert code == 0 and json.loads(out)["result"]["multiplicity"] == 4


def test_set_file(tmp_path, capsys):
    f = tmp_path / "set.txt"
    f.write_text("(1 2 3)\n(1 2)\n")
    code, out, _ = run(capsys, "verify", "--group", "S:3", "--set-file", str(f))
    assert code == 0


def test_sn_cross_csv(capsys):
    code, out, _ = run(capsys, "construct", "sn-cross", "--n", "4", "--full", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 24
    assert all(int(r["claimed_g"]) <= 3 for r in rows)


def test_count_hamilton(capsys):
    code, out, _ = run(capsys, "count", "hamilton", "--glm", "2,2")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "count", "hamilton", "--glm", "2,2", "--format", "json")
    res = json.loads(out)["result"]
    assert res["value"] == "4" and res["matches"] is True


def test_count_other(capsys, tmp_path):
    assert run(capsys, "count", "eulerian", "--kmm", "3")[1].strip() == "5184"
    assert run(capsys, "count", "transition", "--m", "2", "--list")[1].strip() == "4"
    assert run(capsys, "count", "formula", "--r", "3", "--m", "2")[1].strip() == "64"
    m = tmp_path / "m.txt"
    m.write_text("1 1 1\n1 1 1\n1 1 1\n")
    assert run(capsys, "count", "permanent", "--matrix-file", str(m))[1].strip() == "6"
    assert run(capsys, "count", "sigma", "--n", "10", "--r", "2")[1].strip() == "32"


def test_search_and_budget(capsys):
    code, out, _ = run(capsys, "search", "--group", "S:3", "--k", "2")
    assert code == 0 and json.loads(out)["result"]["value"] == 2
    code, out, _ = run(capsys, "search", "--group", "S:4", "--k", "2", "--max-nodes", "2")
    assert code == 3 and json.loads(out)["result"]["exact"] is False
    code, _, err = run(capsys, "verify", "--group", "S:5", "--set", ",".join(f"#{i}" for i in range(30)), "--k", "4", "--max-words", "100")
    assert code == 3 and "budget" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--group", "S:3", "--bogus"])
    assert e.value.code == 2
    code, _, err = run(capsys, "verify", "--group", "Q:3", "--set", "1")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "group", "--group", "S:9")
    assert code == 3


def test_group_and_digraph(capsys, tmp_path):
    code, out, _ = run(capsys, "group", "--group", "S:4", "--bounds", "--k", "3")
    res = json.loads(out)["result"]
    assert res["involutions"] == 9
    assert {b["name"]: b["value"] for b in res["bounds"]}["skprime_subgroup"] == 12
    code, out, _ = run(capsys, "digraph", "--glm", "3,2", "--cll", "3", "--write", str(tmp_path / "g.txt"), "--labels", str(tmp_path / "l.txt"))
    assert code == 0 and json.loads(out)["result"]["cll"]["found"] is False
    assert (tmp_path / "l.txt").exists()
    code, out, _ = run(capsys, "count", "hamilton", "--file", str(tmp_path / "g.txt"))
    assert out.strip() == "64"
    code, out, _ = run(capsys, "digraph", "--group", "Z:7", "--set", "1,2,4", "--fk", "2")
    assert code == 1


def test_constructions(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "os-set", "--p", "5", "--k", "2")
    res = json.loads(out)["result"]
    assert code == 0 and res["verified"] and res["fk_free"] and res["min_semidegree"] == 2
    code, out, _ = run(capsys, "construct", "permanent-lift", "--group", "S:3", "--set", "(1 2 3),(1 2)")
    res = json.loads(out)["result"]
    assert code == 0 and res["size"] == "8" and res["sk_holds"]
    code, out, _ = run(capsys, "construct", "hamilton-lift", "--named", "petersen")
    assert code == 0 and json.loads(out)["result"]["size"] == 0
    edges = tmp_path / "c7.txt"
    edges.write_text("".join(f"{i} {i % 7 + 1}\n" for i in range(1, 8)))
    code, out, _ = run(capsys, "construct", "hamilton-lift", "--graph", str(edges), "--seed", "88")
    assert code == 0 and json.loads(out)["result"]["size"] == 1
    code, out, _ = run(capsys, "construct", "probabilistic", "--group", "Z:31", "--kind", "second", "--seed", "2")
    assert code == 0 and json.loads(out)["result"]["verified"]
    code, out, _ = run(capsys, "construct", "hash-bound", "--t", "4", "--v", "3", "--q", "2", "--n", "6")
    assert json.loads(out)["result"]["bound"] == "96"
    code, out, _ = run(capsys, "construct", "class-recipe", "--group", "S:3", "--element", "(1 2)")
    assert json.loads(out)["result"]["claimed_g"] == 2


def test_determinism(capsys):
    args = ["construct", "probabilistic", "--group", "Z:31", "--kind", "second", "--seed", "4"]
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first


def test_output_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, printed, _ = run(capsys, "search", "--group", "Z:7", "--prop", "sk-prime", "--output", str(out))
    assert printed == "" and json.loads(out.read_text())["result"]["value"] == 3


def test_table(capsys, tmp_path):
    corpus = tmp_path / "abelian"
    corpus.mkdir()
    (corpus / "groups.spec").write_text("Z:2\nZ:12\nprod(Z:2,Z:2)\nprod(Z:2,Z:6)\nZ:7\n")
    code, out, _ = run(capsys, "table", "--corpus", str(corpus))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert [int(r["order"]) for r in rows] == sorted(int(r["order"]) for r in rows)
    assert all(r["M_2"] == "1" for r in rows)

    mixed = tmp_path / "mixed"
    mixed.mkdir()
    (mixed / "g.spec").write_text("S:3\nprod(S:3,S:3)\nnonsense\n")
    code, out, _ = run(capsys, "table", "--corpus", str(mixed))
    rows = {r["group"]: r for r in csv.DictReader(io.StringIO(out))}
    assert rows["S:3"]["M_2"] == "2" and int(rows["prod(S:3,S:3)"]["M_2"]) >= 2
    assert rows["nonsense"]["warning"]

    empty = tmp_path / "empty"
    empty.mkdir()
    code, out, _ = run(capsys, "table", "--corpus", str(empty))
    assert code == 0 and out.strip().count("\n") == 0 and out.startswith("group,order")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "sidonkit.cli", "count", "hamilton", "--glm", "2,2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
