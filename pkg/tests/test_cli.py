import json

import pytest

from hmknf.cli import main

from conftest import KB_DIR

K1 = str(KB_DIR / "k1.kb")
K3 = str(KB_DIR / "k3.kb")
GEN = ["--atoms", "5", "--rules", "6", "--max-body", "2", "--neg-prob", "0.5",
       "--clauses", "2", "--width", "2", "--seed", "42"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_wfp_e_on_k1(capsys):
    code, rep = run_json(capsys, "wfp", K1, "--op", "e")
    assert code == 0
    assert rep == {"status": "consistent", "true": ["b"], "false": ["a", "c"],
                   "undefined": [], "iterations": rep["iterations"]}


def test_wfp_w_on_k1(capsys):
    _, rep = run_json(capsys, "wfp", K1, "--op", "w")
    assert (rep["true"], rep["false"], rep["undefined"]) == ([], ["c"], ["a", "b"])


def test_wfp_afp_cycle(capsys):
    code, rep = run_json(capsys, "wfp", K3, "--op", "afp", "--false", "b")
    assert code == 0
    assert rep["converged"] is False and rep["period"] == 2


def test_enumerate_empty(capsys):
    code, rep = run_json(capsys, "enumerate", str(KB_DIR / "empty.kb"))
    assert code == 0
    assert rep["count"] == 1 and rep["models"] == [{"true": [], "false": []}]


def test_solve_unsat_is_not_an_error(tmp_path, capsys):
    f = tmp_path / "u.kb"
    f.write_text("a :- not a.\n")
    code, rep = run_json(capsys, "solve", str(f), "--op", "w")
    assert code == 0 and rep["status"] == "unsat"


def test_verify(capsys):
    code, rep = run_json(capsys, "verify", K1, "--true", "b", "--false", "a,c")
    assert code == 0 and rep == {"model": True, "unfounded_free": True}


def test_verify_partial_is_contract_error(capsys):
    code, _, err = run(capsys, "verify", K1, "--true", "b", "--false", "a")
    assert code == 1 and "error" in err


def test_check(capsys):
    _, rep = run_json(capsys, "check", K1)
    assert rep["katoms"] == ["a", "b", "c"]


def test_simplify_out(tmp_path, capsys):
    out = tmp_path / "r.kb"
    code, rep = run_json(capsys, "simplify", str(KB_DIR / "k4.kb"), "--out", str(out))
    assert code == 0 and rep["status"] == "reduced"
    assert out.read_text().startswith("#ontology")


def test_syntax_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.kb"
    f.write_text("#rules\na :- B.\n")
    code, _, err = run(capsys, "check", str(f))
    assert code == 1 and "2:6" in err


def test_missing_file_and_usage(capsys):
    assert run(capsys, "check", "/nonexistent.kb")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["wfp", K1])
    assert exc.value.code == 1


def test_unknown_atom_in_flags(capsys):
    assert run(capsys, "wfp", K1, "--op", "w", "--true", "zz")[0] == 1


def test_gen_deterministic(capsys):
    _, a, _ = run(capsys, "gen", *GEN)
    _, b, _ = run(capsys, "gen", *GEN)
    assert a == b and a.startswith("#ontology")


def test_gen_empty_sections(capsys):
    code, out, _ = run(capsys, "gen", "--atoms", "3", "--rules", "0", "--max-body", "0",
                       "--neg-prob", "0.5", "--clauses", "0", "--width", "1", "--seed", "7")
    assert code == 0 and out == ""


def test_gen_invalid(capsys):
    code, _, _ = run(capsys, "gen", "--atoms", "2", "--rules", "1", "--max-body", "3",
                     "--neg-prob", "0.5", "--clauses", "0", "--width", "1", "--seed", "1")
    assert code == 1


def test_compare_stable_and_strict(tmp_path, capsys):
    csv1, csv2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["compare", "--count", "20", *GEN, "--include", K1]
    code, rep1 = run_json(capsys, *args, "--csv", str(csv1))
    _, rep2 = run_json(capsys, *args, "--csv", str(csv2))
    assert code == 0
    assert rep1 == rep2 and csv1.read_bytes() == csv2.read_bytes()
    assert rep1["chain_violations"] == 0
    assert 0 in rep1["strict_instances"]
    assert csv1.read_text().splitlines()[0] == \
        "instance,propagator,katoms,root_true,root_false,root_undefined,decisions,conflicts"


def test_compare_empty_rule_corpus(capsys):
    code, rep = run_json(capsys, "compare", "--count", "5", "--rules", "0", "--seed", "3")
    assert code == 0 and rep["strict_gaps"] == 0
