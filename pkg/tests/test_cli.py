"""End-to-end runs of the command line front end."""

import json
import subprocess
import sys

from hyperrank import diffset

STRINGS_TEXT_9 = [
    "000000001  1",
    "000000101  5",
    "000001101  13",
    "000010101  21",
    "000110101  53",
    "001001101  77",
    "001010101  85",
    "001100111  103",
    "010100111  167",
]

GLYNN2_TERMS = "1,1,5,7,21,37,89,173,383,777,1665,3441,7277,15159,31885,66645"
GLYNN1_TERMS = "1,3,7,13,23,45,87,167,321,619,1193,2299,4431,8541"


def run_cli(*argv, binary=False):
    return subprocess.run(
        [sys.executable, "-m", "hyperrank", *argv],
        capture_output=True,
        text=not binary,
    )


def test_envelope_shape():
    proc = run_cli("rank", "bk", "-k", "6", "-d", "9")
    assert proc.returncode == 0
    envelope = json.loads(proc.stdout)
    assert envelope == {
        "command": "rank bk",
        "field_metadata": {"d": 9, "generator_hex": "7", "modulus_hex": "203"},
        "params": {"d": 9, "k": 6, "lax": False},
        "payload": {"A": 9, "B": 81, "d": 9, "k": 6},
        "schema_version": 1,
    }
    # serialization is canonical: sorted keys, two-space indent
    assert proc.stdout == json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def test_exit_codes():
    domain = run_cli("rank", "bk", "-k", "4", "-d", "4")
    assert domain.returncode == 2
    assert domain.stderr.startswith("error:")
    capacity = run_cli("rank", "bk", "-k", "6", "-d", "99")
    assert capacity.returncode == 3
    assert capacity.stderr.startswith("error:")
    usage = run_cli("frobnicate")
    assert usage.returncode == 64
    missing = run_cli("rank", "bk", "-k", "6")
    assert missing.returncode == 64


def test_table1_csv():
    proc = run_cli("report", "table1", "--dmax", "25", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "d,A6,AglynnI,AglynnII"
    assert lines[1] == "3,1,1,1"
    assert lines[-1] == "25,465,1193,3441"
    assert len(lines) == 13


def test_table1_deterministic():
    first = run_cli("report", "table1", "--dmax", "25", binary=True)
    second = run_cli("report", "table1", "--dmax", "25", binary=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_build_then_rank_roundtrip(tmp_path):
    build = run_cli("diffset", "build", "--family", "segre", "-d", "5")
    assert build.returncode == 0
    payload = json.loads(build.stdout)["payload"]
    ds = diffset.segre_set(5)
    assert payload["d"] == 5
    assert payload["family"] == "segre"
    assert payload["params"] == {"family": "segre", "k": 6}
    assert (payload["n"], payload["size"], payload["lam"]) == (31, 15, 7)
    assert [int(h, 16) for h in payload["elements_hex"]] == list(ds.elements)

    setfile = tmp_path / "segre5.json"
    setfile.write_text(build.stdout, encoding="utf-8")
    for method, name in (("digit", "DigitCount"), ("dense", "DenseElimination")):
        ranked = run_cli("rank", "diffset", "--in", str(setfile),
                         "--method", method)
        assert ranked.returncode == 0
        got = json.loads(ranked.stdout)["payload"]
        assert got["method"] == name
        assert got["label"] == ds.label
        assert (got["rank_set"], got["rank_complement"]) == (16, 15)
        assert (got["B"], got["A"]) == (15, 3)


def test_verify_gmw():
    proc = run_cli("diffset", "verify", "--family", "gmw",
                   "--u", "3", "--v", "2", "--r", "3")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)["payload"]
    assert payload == {
        "d": 6,
        "family": "gmw",
        "params": {"family": "gmw", "r": 3, "u": 3, "v": 2},
        "n": 63,
        "size": 31,
        "lam": 15,
        "is_difference_set": True,
    }


def test_segre_strings_text():
    proc = run_cli("segre", "strings", "-d", "9", "--format", "text")
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == STRINGS_TEXT_9


def test_glynn_certify_payload():
    proc = run_cli("glynn", "certify", "--type", "2")
    assert proc.returncode == 0
    envelope = json.loads(proc.stdout)
    assert envelope["field_metadata"] is None
    assert envelope["payload"] == {
        "type": 2,
        "ok": True,
        "P": 127,
        "Q": 128,
        "d_first": 11,
        "d_last": 267,
        "recurrence": {"order": 4, "coeffs": [1, -1, -3, 1, 1],
                       "constant": 1, "start": 4},
    }


def test_seq_guess_recovers_recurrence():
    proc = run_cli("seq", "guess", "--terms", GLYNN2_TERMS)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)["payload"]
    assert payload["recurrence"] == {"order": 4, "coeffs": [1, -1, -3, 1, 1],
                                     "constant": 1, "start": 4}
    short = run_cli("seq", "guess", "--terms", "1,2,3")
    assert short.returncode == 2
    assert short.stderr.startswith("error:")


def test_seq_certify_from_file(tmp_path):
    termfile = tmp_path / "terms.txt"
    termfile.write_text(GLYNN1_TERMS.replace(",", "\n"), encoding="utf-8")
    rec = json.dumps({"coeffs": [1, -1, -1, -1, -1], "constant": -1,
                      "start": 4})
    proc = run_cli("seq", "certify", "--rec", rec, "--terms", str(termfile),
                   "--P", "5", "--Q", "9")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)["payload"]
    assert payload["ok"] is True
    assert (payload["P"], payload["Q"]) == (5, 9)
    assert (payload["checked_from"], payload["checked_to"]) == (4, 13)


def test_selftest_quick():
    proc = run_cli("selftest", "--quick")
    assert proc.returncode == 0
    assert "checks passed" in proc.stdout
    assert "FAIL" not in proc.stdout
