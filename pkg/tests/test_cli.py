"""Command-line surface: JSON round trips, exit codes, fresh-process
verification of produced certificates."""

import json
import subprocess
import sys

from adjreal.cli import main
from adjreal.gaussian import gr
from adjreal.matrix import ExactMatrix
from adjreal.symplectic import nilpotent_from_partition

SL2_CTX = '{"algebra":"sl","group":"SL","n":2}'


def _matrix_file(tmp_path, name, matrix):
    path = tmp_path / name
    path.write_text(json.dumps(matrix.to_json()))
    return str(path)


def _run_main(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_decide_exit_codes_and_payload(tmp_path, capsys):
    mfile = _matrix_file(tmp_path, "h.json", ExactMatrix.diagonal([1, -1]))
    code, payload = _run_main(capsys, ["decide", "--ctx", SL2_CTX, "--matrix", mfile])
    assert code == 0
    assert payload["real"] == "yes"
    assert payload["strongly_real"] == "no"
    assert payload["reason"] == "NMod4"


def test_decide_negative_exit_code(tmp_path, capsys):
    mfile = _matrix_file(tmp_path, "h.json", ExactMatrix.diagonal([gr(1), gr(-2)]))
    ctx = '{"algebra":"gl","group":"GL","n":2}'
    code, payload = _run_main(capsys, ["decide", "--ctx", ctx, "--matrix", mfile])
    assert code == 1
    assert payload["real"] == "no"


def test_witness_then_verify_same_process(tmp_path, capsys):
    mfile = _matrix_file(
        tmp_path, "h.json", ExactMatrix.diagonal([gr(1), gr(2), gr(-1), gr(-2)])
    )
    ctx = '{"algebra":"sl","group":"SL","n":4}'
    cert_file = str(tmp_path / "cert.json")
    code, payload = _run_main(
        capsys,
        ["witness", "--ctx", ctx, "--matrix", mfile, "--involution", "--out", cert_file],
    )
    assert code == 0
    assert payload["claims_involution"] is True
    code, report = _run_main(capsys, ["verify", cert_file])
    assert code == 0
    assert report["verified"] is True


def test_witness_verify_fresh_process(tmp_path):
    mfile = _matrix_file(
        tmp_path, "h.json", ExactMatrix.diagonal([gr(1), gr(2), gr(-1), gr(-2)])
    )
    ctx = '{"algebra":"sl","group":"SL","n":4}'
    cert_file = str(tmp_path / "cert.json")
    run = subprocess.run(
        [sys.executable, "-m", "adjreal.cli", "witness", "--ctx", ctx,
         "--matrix", mfile, "--involution", "--out", cert_file],
        capture_output=True, text=True,
    )
    assert run.returncode == 0
    run = subprocess.run(
        [sys.executable, "-m", "adjreal.cli", "verify", cert_file],
        capture_output=True, text=True,
    )
    assert run.returncode == 0
    assert json.loads(run.stdout)["verified"] is True


def test_verify_tampered_certificate_exit_two(tmp_path, capsys):
    mfile = _matrix_file(tmp_path, "h.json", ExactMatrix.diagonal([1, -1]))
    cert_file = str(tmp_path / "cert.json")
    code, _ = _run_main(
        capsys, ["witness", "--ctx", SL2_CTX, "--matrix", mfile, "--out", cert_file]
    )
    assert code == 0
    blob = json.loads(open(cert_file).read())
    blob["reverser"]["entries"][0][0] = "7"
    bad_file = str(tmp_path / "bad.json")
    open(bad_file, "w").write(json.dumps(blob))
    code, report = _run_main(capsys, ["verify", bad_file])
    assert code == 2
    assert report["verified"] is False
    assert any("Anticonjugation" in f for f in report["failures"])


def test_denied_witness_exit_one(tmp_path, capsys):
    mfile = _matrix_file(tmp_path, "h.json", ExactMatrix.diagonal([1, -1]))
    code, payload = _run_main(
        capsys, ["witness", "--ctx", SL2_CTX, "--matrix", mfile, "--involution"]
    )
    assert code == 1
    assert payload["error"] == "NotRealizable"


def test_parse_error_exit_two(capsys):
    code, payload = _run_main(
        capsys, ["decide", "--ctx", SL2_CTX, "--matrix", "/nonexistent.json"]
    )
    assert code == 2
    assert payload["error"] == "ParseError"


def test_jordan_chains_sl2_commands(tmp_path, capsys):
    x = nilpotent_from_partition([2, 2])
    mfile = _matrix_file(tmp_path, "n.json", x)
    code, payload = _run_main(capsys, ["sl2", "--matrix", mfile])
    assert code == 0
    assert set(payload) == {"x", "h", "y"}
    code, payload = _run_main(capsys, ["chains", "--matrix", mfile])
    assert code == 0
    assert payload["parts"] == [2]
    code, payload = _run_main(capsys, ["jordan", "--matrix", mfile])
    assert code == 0
    nil = ExactMatrix.from_json(payload["nilpotent_part"])
    assert nil == x


def test_reverse_command(tmp_path, capsys):
    x = nilpotent_from_partition([2])
    mfile = _matrix_file(tmp_path, "n.json", x)
    code, payload = _run_main(capsys, ["reverse", "--matrix", mfile])
    assert code == 0
    cert_file = str(tmp_path / "rcert.json")
    open(cert_file, "w").write(json.dumps(payload))
    code, report = _run_main(capsys, ["verify", cert_file])
    assert code == 0 and report["verified"]


def test_reverse_command_irrational_semisimple_exit_one(tmp_path, capsys):
    a = ExactMatrix.from_rows([[0, 1], [2, 0]])
    xs = ExactMatrix.block_diagonal([a, -a.transpose()])
    mfile = _matrix_file(tmp_path, "irr.json", xs)
    code, payload = _run_main(capsys, ["reverse", "--matrix", mfile])
    assert code == 1
    assert payload["error"] == "SpectrumNotSplit"


def test_search_command_exhausted_exit_one(tmp_path, capsys):
    mfile = _matrix_file(tmp_path, "h.json", ExactMatrix.diagonal([gr(3), gr(-3)]))
    ctx = '{"algebra":"sp","group":"Sp","n":1}'
    code, payload = _run_main(
        capsys,
        ["search", "--ctx", ctx, "--matrix", mfile, "--height", "3", "--involution"],
    )
    assert code == 1
    assert payload["outcome"] == "exhausted"


def test_selftest_single_criterion(capsys):
    code = main(["selftest", "--criterion", "2", "--seed", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("PASS criterion 2")


def test_matrix_round_trip_canonical_strings(tmp_path, capsys):
    x = ExactMatrix.from_rows([[gr("1/2") - gr(0, 3), gr(0)], [gr(0), gr(0, 3) - gr("1/2")]])
    mfile = _matrix_file(tmp_path, "m.json", x)
    code, payload = _run_main(capsys, ["jordan", "--matrix", mfile])
    assert code == 0
    assert ExactMatrix.from_json(payload["semisimple_part"]) == x
