import json

import pytest

from int2gc.cli import run
from int2gc.jsonio import algebra_from_json, model_from_json
from int2gc.semantics import eval_formula
from int2gc.kripke import satisfies


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_countermodel_for_d_or(capsys):
    code, out, _ = call(capsys, "countermodel", "G(p|q) -> G p | F q",
                        "--mode", "algebra", "--fs", "--max", "5")
    assert code == 1 and out["found"]
    alg = algebra_from_json(out["witness"]["algebra"])
    v = out["witness"]["valuation"]
    assert eval_formula("G(p|q) -> G p | F q", alg, v) != alg.top


def test_witness_algebra_replays_as_fixture(capsys, tmp_path):
    _, out, _ = call(capsys, "countermodel", "G(p|q) -> G p | F q",
                     "--mode", "algebra", "--fs", "--max", "5")
    f = tmp_path / "w.json"
    f.write_text(json.dumps(out["witness"]["algebra"]))
    code, rep, _ = call(capsys, "check-algebra", str(f), "--fs")
    assert code == 0 and rep["fs"]
    vals = [f"{k}={x}" for k, x in out["witness"]["valuation"].items()]
    code, rep, _ = call(capsys, "eval", "--algebra", str(f), "--val", *vals,
                        "G(p|q) -> G p | F q")
    assert code == 0 and not rep["is_top"]


def test_kripke_countermodel(capsys):
    code, out, _ = call(capsys, "countermodel", "G(p->q) -> (F p -> F q)",
                        "--mode", "kripke", "--max", "2")
    assert code == 1
    m = model_from_json(out["witness"]["model"])
    assert not satisfies(m, out["witness"]["world"], "G(p->q) -> (F p -> F q)")
    code, out, _ = call(capsys, "countermodel", "G(p->q) -> (F p -> F q)",
                        "--mode", "kripke", "--fs", "--max", "2")
    assert code == 0 and not out["found"]


def test_rough_verify(capsys):
    code, out, _ = call(capsys, "rough", "example3_4.json", "--verify", "--power")
    assert code == 0 and out["ok"]
    vals = [n["values"] for n in out["notes"] if "values" in n]
    assert vals and vals[0]["x"] == ["1", "c"]
    ids = out["power_algebra"]["identities"]
    assert ids["d1"] and ids["d2"]
    assert not out["power_algebra"]["G(p|q) -> G p | F q"]["valid"]


def test_rough_op(capsys):
    code, out, _ = call(capsys, "rough", "example3_4.json", "--op", "diaF", "--set", "phi")
    assert code == 0 and out["result"] == {"x": "0", "y": "0"}


def test_prove_and_corpus(capsys):
    code, out, _ = call(capsys, "prove", "scripts/gc1-unit.json")
    assert code == 0 and out["ok"] and out["conclusion"] == "p -> H F p"
    code, out, _ = call(capsys, "corpus", "--run-all")
    assert code == 0 and out["accepted"] == out["scripts"]


def test_bad_proof_exits_1(capsys, tmp_path):
    _, out, _ = call(capsys, "prove", "scripts/gc1-unit.json")
    from int2gc import data_path
    d = json.loads(data_path("scripts", "gc1-unit.json").read_text())
    d["lines"][-1]["just"]["name"] = "GC_FH_elim"
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(d))
    code, out, _ = call(capsys, "prove", str(f))
    assert code == 1 and out["line"] == 6 and out["error"] == "BadRuleApplication"


def test_eval_three_chain(capsys):
    code, out, _ = call(capsys, "eval", "--algebra", "three_chain.json",
                        "--val", "p=1", "q=u", "G(p->q)->(F p->F q)")
    assert code == 0 and out["value"] == "u"
    code, out, _ = call(capsys, "valid", "--algebra", "three_chain.json",
                        "G(p->q)->(F p->F q)")
    assert code == 1 and out["witness"]["valuation"] == {"p": "u", "q": "0"}


def test_frames(capsys):
    assert call(capsys, "check-frame", "two_world_fs.json")[0] == 0
    code, out, _ = call(capsys, "check-frame", "two_world_r5_violation.json")
    assert code == 1 and out["witness"]
    code, out, _ = call(capsys, "valid", "--frame", "two_world_fs.json", "G p -> p")
    assert code == 0 and out["valid"]


def test_canonical(capsys):
    code, out, _ = call(capsys, "canonical", "--algebra", "three_chain.json")
    assert code == 0 and sorted(out["frame"]["worlds"]) == ["{1}", "{u,1}"]
    code, out, _ = call(capsys, "canonical", "--algebra", "example3_4_lattice.json",
                        "--fs", "--check-key-lemma", "1")
    assert code == 0 and out["key_lemma"]["ok"]


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--what", "h2gc", "--max", "4")
    assert code == 0 and out["total"] == 577
    assert out["by_size"] == {"1": 1, "2": 4, "3": 36, "4": 536}
    code, out, _ = call(capsys, "enumerate", "--what", "heyting", "--max", "6")
    assert out["total"] == 1 + 1 + 1 + 2 + 3 + 5


def test_parse(capsys):
    code, out, _ = call(capsys, "parse", "G(p | q) -> G p | F q")
    assert code == 0 and out["formula"] == "G (p | q) -> G p | F q"
    assert out["variables"] == ["p", "q"]


@pytest.mark.parametrize("argv", [
    ["parse", "p ->"],
    ["eval", "--algebra", "three_chain.json", "--val", "p=z", "p"],
    ["eval", "--algebra", "three_chain.json", "p & r"],
    ["valid", "G p"],
    ["prove", "no/such/file.json"],
    ["rough", "example3_4.json"],
    ["countermodel", "p"],
    ["frobnicate"],
    [],
])
def test_usage_and_input_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2


def test_deterministic(capsys):
    argv = ["countermodel", "G(p|q) -> G p | F q", "--mode", "algebra", "--fs", "--max", "5"]
    assert call(capsys, *argv)[1] == call(capsys, *argv)[1]
