import json

import pandas as pd
import pytest

import analyze_action
import cli
import compute_arity
import compute_closure
import count_orbits
import run_corpus
import run_test5
import verify_certificate
from config import FIXTURES_DIR, SMALL_GROUPS_DIR

A4_FILE = SMALL_GROUPS_DIR / "T4_4_A4.json"
C5_FILE = SMALL_GROUPS_DIR / "T5_1_C5.json"


def run(main, *args) -> int:
    with pytest.raises(SystemExit) as exc:
        main([str(a) for a in args])
    return exc.value.code


def test_analyze_text(capsys):
    assert run(analyze_action.main, A4_FILE, "-q") == 0
    out = capsys.readouterr().out
    assert "Test 1: non_binary [Test 1 (orbit count bound)] r_3=2 > r_2^3=1" in out
    assert out.strip().endswith("verdict: non-binary")


def test_analyze_json(capsys):
    assert run(analyze_action.main, C5_FILE, "-q", "--format", "json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "binary"
    assert report["arity"] == 2
    assert "time_spent_seconds" not in report


def test_analyze_writes_output_file(tmp_path, capsys):
    out = tmp_path / "reports" / "a4.json"
    assert run(analyze_action.main, A4_FILE, "-q", "--format", "json", "-o", out) == 0
    assert json.loads(out.read_text())["verdict"] == "non-binary"
    assert capsys.readouterr().out == ""


def test_emit_and_verify_witness(tmp_path, capsys):
    witness = tmp_path / "witness.json"
    assert run(analyze_action.main, A4_FILE, "-q", "--tests", "3", "--emit-witness", witness) == 0
    assert witness.exists()
    capsys.readouterr()
    assert run(verify_certificate.main, witness) == 0
    assert capsys.readouterr().out.strip() == "Verified"


def test_verify_rejects_tampered_certificate(tmp_path, capsys):
    witness = tmp_path / "witness.json"
    run(analyze_action.main, A4_FILE, "-q", "--tests", "3", "--emit-witness", witness)
    data = json.loads(witness.read_text())
    data["J"] = data["I"]
    witness.write_text(json.dumps(data))
    capsys.readouterr()
    assert run(verify_certificate.main, witness) == 1
    assert capsys.readouterr().out.strip() == "Rejected: global transporter exists"
    assert run(verify_certificate.main, witness, "--format", "json") == 1
    assert json.loads(capsys.readouterr().out) == {"verified": False, "reason": "global transporter exists"}


def test_verify_unreadable_file(tmp_path):
    assert run(verify_certificate.main, tmp_path / "missing.json") == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(verify_certificate.main, bad) == 2
    bad.write_text(json.dumps({"I": [0]}))
    assert run(verify_certificate.main, bad) == 2


def test_analyze_invalid_input(tmp_path):
    assert run(analyze_action.main, tmp_path / "missing.json") == 2
    assert run(analyze_action.main, A4_FILE, "--tests", "9") == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"degree": 3, "generators": ["(0 1 2)"], "order": 6}))
    assert run(analyze_action.main, wrong, "-q") == 2
    malformed = tmp_path / "malformed.json"
    malformed.write_text(json.dumps({"degree": 3, "generators": ["(0 7)"]}))
    assert run(analyze_action.main, malformed, "-q") == 2


def test_analyze_budget_exit_code(capsys):
    code = run(analyze_action.main, SMALL_GROUPS_DIR / "T4_5_S4.json", "-q", "--tests", "3", "--no-oracle", "--budget-nodes", "1")
    assert code == 3
    assert "verdict: inconclusive" in capsys.readouterr().out


def test_closure_text(capsys):
    assert run(compute_closure.main, A4_FILE, "-q") == 0
    out = capsys.readouterr().out
    assert "closure: Sym(4)" in out
    assert "2-closed: no" in out
    assert "witness element: (0 1)" in out


def test_closure_json(capsys):
    assert run(compute_closure.main, C5_FILE, "-q", "--format", "json") == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["is_two_closed"] is True
    assert summary["closure_order"] == "5"


def test_arity(capsys):
    assert run(compute_arity.main, A4_FILE, "-q") == 0
    assert capsys.readouterr().out.strip() == "A4: arity 3"
    assert run(compute_arity.main, C5_FILE, "-q", "--format", "json") == 0
    assert json.loads(capsys.readouterr().out)["binary"] is True


def test_arity_budget_and_regime(capsys):
    assert run(compute_arity.main, A4_FILE, "-q", "--tuple-budget", "1") == 3
    assert "arity >= 2" in capsys.readouterr().out
    assert run(compute_arity.main, FIXTURES_DIR / "M11_on_11.json", "-q") == 2


def test_count_orbits(capsys):
    assert run(count_orbits.main, A4_FILE, "-q", "--ell-max", "4", "--format", "json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["agree"] is True
    assert report["counts"]["character_sum"] == {"1": 1, "2": 1, "3": 2, "4": 2}
    assert report["counts"]["direct_orbit"] == report["counts"]["character_sum"]


def test_count_orbits_text(capsys):
    assert run(count_orbits.main, C5_FILE, "-q", "--ell-max", "3", "--method", "direct_orbit") == 0
    assert "r_3: direct_orbit=12" in capsys.readouterr().out
    assert run(count_orbits.main, C5_FILE, "--ell-max", "0") == 2


def test_test5(capsys):
    path = SMALL_GROUPS_DIR / "T6_01_C6.json"
    assert run(run_test5.main, path, "-q", "--omega-size", "10", "--d", "2", "--exact-condition2") == 0
    out = capsys.readouterr().out
    assert out.startswith("conclusion: non_binary")
    assert "degree 3 (|H| = 2, |M^Lambda| = 3): filtered by condition (2)" in out


def test_test5_json(capsys):
    path = SMALL_GROUPS_DIR / "T6_01_C6.json"
    assert run(run_test5.main, path, "-q", "--omega-size", "10", "--d", "2", "--format", "json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["conclusion"] == "inconclusive"
    assert report["omega_size"] == "10"


def test_test5_invalid_input():
    path = SMALL_GROUPS_DIR / "T6_01_C6.json"
    assert run(run_test5.main, path, "-q") == 2
    assert run(run_test5.main, path, "-q", "--omega-size", "1e3", "--d", "2") == 2
    assert run(run_test5.main, path, "-q", "--omega-size", "10", "--d", "1") == 2


def test_run_corpus(tmp_path, capsys):
    folder = tmp_path / "groups"
    folder.mkdir()
    for name in ("T4_4_A4.json", "T5_1_C5.json"):
        (folder / name).write_text((SMALL_GROUPS_DIR / name).read_text())
    out = tmp_path / "verdicts.csv"
    assert run(run_corpus.main, folder, "-q", "-o", out) == 0
    df = pd.read_csv(out)
    assert list(df["verdict"]) == ["non-binary", "binary"]
    assert "time_spent_seconds" not in df.columns

    assert run(run_corpus.main, folder, "-q") == 0
    assert capsys.readouterr().out.startswith("source_file,action,degree")


def test_run_corpus_missing_folder(tmp_path):
    assert run(run_corpus.main, tmp_path / "nowhere", "-q") == 2


def test_cli_dispatch(capsys):
    assert run(cli.main, "arity", A4_FILE, "-q") == 0
    assert capsys.readouterr().out.strip() == "A4: arity 3"
    assert run(cli.main) == 2
    assert run(cli.main, "--help") == 0
    assert run(cli.main, "frobnicate") == 2
