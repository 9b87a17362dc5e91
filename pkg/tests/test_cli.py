import json
from fractions import Fraction
import os
import subprocess
import sys

import pytest

from symprod import io
from symprod.cli import EXIT_INPUT, EXIT_OK, EXIT_UNDECIDED, emit_fixture, main
from symprod.curves import CurveProfile
from symprod.nefcone import verify_tau_certificate
from symprod.special_position import decide, gen_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fixture_file(tmp_path, family, **params):
    path = tmp_path / f"{family}.json"
    emit_fixture(family, params, path)
    return str(path)


def test_decide_pencil(tmp_path, capsys):
    cfg = fixture_file(tmp_path, "pencil", d=3, n=3)
    code, out, _ = run(capsys, "specpos-decide", "--config", cfg, "--trials", "200", "--seed", "1")
    assert code == EXIT_OK and "verdict: special" in out
    code, out, _ = run(capsys, "specpos-decide", "--config", cfg, "--json")
    doc = json.loads(out)
    assert doc["verdict"] == "special" and doc["dependencies"][2] == ["1", "1", "0"]


def test_decide_not_special_and_undecided(tmp_path, capsys):
    cfg = fixture_file(tmp_path, "triangle")
    code, out, _ = run(capsys, "specpos-decide", "--config", cfg, "--json")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "not_special"
    cfg = fixture_file(tmp_path, "random_skew", d=5, n=3, seed=2)
    code, out, _ = run(capsys, "specpos-decide", "--config", cfg, "--trials", "5")
    assert code == EXIT_UNDECIDED and "undecided" in out


def test_nefcone_verify(capsys):
    code, out, _ = run(capsys, "nefcone-verify", "--g", "6", "--a", "32", "--b", "13", "--tau-prev", "9/4")
    assert code == EXIT_OK
    assert "valid: True" in out and "L^2=179" in out and "f(m) = 10m^2 -153m +715" in out
    code, out, _ = run(capsys, "nefcone-verify", "--g", "6", "--a", "29", "--b", "13", "--tau-prev", "9/4", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["valid"] is False and doc["failed_check"] == "ratio"


def test_nefcone_search(capsys):
    code, out, _ = run(capsys, "nefcone-search", "--g", "8", "--tau-prev", "77/29", "--b-max", "6", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and (doc["a"], doc["b"]) == ("17", "6")
    code, _, err = run(capsys, "nefcone-search", "--g", "6", "--tau-prev", str(2**70), "--b-max", "1")
    assert code == EXIT_INPUT and "no valid certificate" in err


def test_degirr_json(capsys):
    code, out, _ = run(capsys, "degirr", "--genus", "6", "--class", "very-general", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and (doc["lo"], doc["hi"], doc["exact"]) == (5, 15, False)


def test_other_value_commands(capsys):
    code, out, _ = run(capsys, "bn", "--genus", "6", "--r", "2", "--d", "6", "--json")
    assert json.loads(out) == {"genus": 6, "r": 2, "generic_min_degree": 6, "d": 6, "rho": 0}
    code, out, _ = run(capsys, "gonality", "--genus", "5", "--json")
    assert json.loads(out)["gonality"] == 4
    code, out, _ = run(capsys, "dego", "--genus", "5", "--k", "7", "--json")
    assert (json.loads(out)["lo"], json.loads(out)["hi"]) == (1, 1)
    code, out, _ = run(capsys, "degirr", "--genus", "9", "--class", "hyperelliptic")
    assert code == EXIT_OK and "lo: 4" in out


def test_span_oracle_plucker(tmp_path, capsys):
    cfg = fixture_file(tmp_path, "quadric_ruling", d=4)
    code, out, _ = run(capsys, "specpos-span", "--config", cfg, "--json")
    assert json.loads(out) == {"span_dim": 3, "bound": 3, "applicable": True, "ok": True}
    pencil = fixture_file(tmp_path, "pencil", d=3, n=3)
    code, out, _ = run(capsys, "specpos-oracle", "--config", pencil, "--prime", "3", "--json")
    assert json.loads(out) == {"prime": 3, "special": True, "planes_checked": 130}
    code, out, _ = run(capsys, "plucker", "--config", pencil, "--json")
    doc = json.loads(out)
    assert doc["plucker"][2]["coords"] == ["1", "1", "0", "0", "0", "0"]


@pytest.mark.parametrize("argv", [
    ["bn", "--genus", "6"],
    ["nope"],
    ["nefcone-verify", "--g", "6", "--a", "0", "--b", "13", "--tau-prev", "9/4"],
    ["nefcone-verify", "--g", "6", "--a", "32", "--b", "13", "--tau-prev", "2.25"],
    ["degirr", "--genus", "6", "--class", "very-general", "--gonality", "3"],
    ["dego", "--genus", "6", "--class", "arbitrary"],
    ["specpos-decide", "--config", "/nonexistent/file.json"],
    ["fixture", "--family", "pencil"],
    ["fixture", "--family", "scroll", "--d", "3"],
    ["degirr", "--genus", "6", "--class", "generic"],
])
def test_input_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == EXIT_INPUT
    assert capsys.readouterr().err


def test_float_in_config_rejected(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 3, "k": 2, "subspaces": [[[1.0, 0, 0, 0], ["0", "1", "0", "0"]]]}')
    code, _, err = run(capsys, "specpos-span", "--config", str(path))
    assert code == EXIT_INPUT and "floating" in err


def test_fixture_command_writes_file(tmp_path, capsys):
    out = tmp_path / "skew.json"
    code, text, _ = run(capsys, "fixture", "--family", "random_skew", "--d", "4", "--n", "3",
                        "--seed", "7", "--out", str(out))
    assert code == EXIT_OK and "wrote" in text
    first = out.read_bytes()
    run(capsys, "fixture", "--family", "random_skew", "--d", "4", "--n", "3", "--seed", "7", "--out", str(out))
    assert out.read_bytes() == first
    assert io.load_config(out) == gen_fixture("random_skew", d=4, n=3, seed=7)
    code, text, _ = run(capsys, "fixture", "--family", "quadric_ruling", "--d", "4", "--t", "0", "1/2", "3", "-1")
    assert code == EXIT_OK and json.loads(text)["subspaces"][1][0] == ["1", "1/2", "0", "0"]


FAMILY_PARAMS = [
    ("pencil", dict(d=5, n=4)),
    ("quadric_ruling", dict(d=4)),
    ("scroll", dict(d=6)),
    ("triangle", dict(n=4)),
    ("random_skew", dict(d=4, n=3, seed=3)),
]


@pytest.mark.parametrize("family,params", FAMILY_PARAMS)
def test_config_and_certificate_round_trip(tmp_path, family, params):
    c = gen_fixture(family, **params)
    path = tmp_path / "c.json"
    io.save_config(c, path)
    assert io.load_config(path) == c
    assert io.config_from_json(json.loads(io.dumps(io.config_to_json(c)))) == c
    cert = decide(c, trials=50)
    doc = json.loads(io.dumps(io.certificate_to_json(cert)))
    assert io.certificate_from_json(doc, c.field) == cert


def test_prime_field_config_round_trip():
    from symprod.special_position import reduce_mod
    c = reduce_mod(gen_fixture("pencil", d=3, n=3), 5)
    doc = io.config_to_json(c)
    assert doc["field"] == {"prime": 5}
    assert io.config_from_json(doc) == c


def test_report_and_profile_round_trip():
    r = verify_tau_certificate(6, 33, 13, 0, 1)
    assert io.cert_report_from_json(json.loads(io.dumps(io.cert_report_to_json(r)))) == r
    r = verify_tau_certificate(7, 77, 29, Fraction(32, 13), 5)
    assert io.cert_report_from_json(io.cert_report_to_json(r)) == r
    p = CurveProfile(7, "non_hyperelliptic", 4, {3: 6})
    assert io.profile_from_json(io.profile_to_json(p)) == p


def _cli(argv, threads):
    env = dict(os.environ, SYMPROD_THREADS=str(threads))
    return subprocess.run([sys.executable, "-m", "symprod.cli", *argv], env=env,
                          capture_output=True, check=False)


def test_byte_identical_output(tmp_path):
    cfg = tmp_path / "skew.json"
    io.save_config(gen_fixture("random_skew", d=4, n=3, seed=9), cfg)
    argv = ["specpos-decide", "--config", str(cfg), "--seed", "42", "--json"]
    outs = {_cli(argv, t).stdout for t in (1, 4, 1)}
    assert len(outs) == 1 and json.loads(outs.pop())["verdict"] == "not_special"
