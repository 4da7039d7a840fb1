import json
import subprocess
import sys

import pytest

from jackmac.cli import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, Config, main
from jackmac.exact import format_scalar
from jackmac.jack import jack_P, principal_specialization
from jackmac.macdonald import principal_spec_tdelta
from jackmac.symfunc import p_lambda, to_basis


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_jack_expand_text_and_json(capsys):
    code, out, _ = run(capsys, "jack", "expand", "--lambda", "2", "--n", "2")
    assert code == EXIT_OK
    assert out.strip() == "m[2] + ((2*tau)/(1 + tau)) m[1,1]"
    code, data = run_json(capsys, "jack", "expand", "--lambda", "3,1", "--n", "3")
    assert {k: v for k, v in data.items() if k != "seed"} == jack_P((3, 1), 3).to_json()
    assert data["seed"] == 0


def test_jack_eval1_matches_library(capsys):
    code, data = run_json(capsys, "jack", "eval1", "--lambda", "3,1", "--n", "3")
    assert code == EXIT_OK
    assert data["value"] == format_scalar(principal_specialization((3, 1), 3))


def test_mac_eval_matches_library(capsys):
    code, data = run_json(capsys, "mac", "eval", "--lambda", "2", "--n", "2", "--at", "tdelta")
    assert data["value"] == format_scalar(principal_spec_tdelta((2,), 2))


def test_fp_check(capsys):
    code, out, _ = run(capsys, "fp", "check", "--expr", "(t^2-t+1)/(t+1)", "--vars", "tau")
    assert code == EXIT_OK and out.strip() == "InCone, N=1"
    code, out, _ = run(capsys, "fp", "check", "--expr", "t-2", "--vars", "tau")
    assert code == EXIT_VIOLATION and out.startswith("NotInCone")
    code, data = run_json(capsys, "fp", "check", "--expr", "(q^2+t^2)/(q*t+1)", "--vars", "qt")
    assert code == EXIT_OK and data["kind"] == "InCone"


def test_power_sum_difference(capsys):
    code, data = run_json(capsys, "diff", "--family", "p", "--lambda", "3,3", "--mu", "3,2,1", "--n", "3")
    terms = {t["partition"]: t["coeff"] for t in data["terms"]}
    assert terms == {"6": "2/9", "5,1": "-2/9", "4,2": "-2/9", "3,3": "4/9", "3,2,1": "-2/9"}
    f = p_lambda((3, 3), 3) / p_lambda((3, 3), 3).eval_ones() - p_lambda((3, 2, 1), 3) / 27
    assert data["monomial"] == f.to_json()
    code, data = run_json(capsys, "diff", "--family", "m", "--lambda", "3,3", "--mu", "3,2,1", "--n", "3")
    assert {t["partition"]: t["coeff"] for t in data["terms"]} == {"3,3": "1", "3,2,1": "-1"}


def test_jack_diff_matches_library(capsys):
    from jackmac.jack import normalized_diff

    code, data = run_json(capsys, "diff", "--family", "jack", "--lambda", "3", "--mu", "2,1", "--n", "2",
                          "--shift")
    assert data["monomial"] == normalized_diff((3,), (2, 1), 2, shift=True).to_json()
    M = to_basis(normalized_diff((3,), (2, 1), 2, shift=True), "M")
    assert len(data["terms"]) == len(M.terms)


def test_cert_exit_codes(capsys, tmp_path):
    code, data = run_json(capsys, "cert", "muirhead", "--pair", "3;2,1", "--family", "m", "--n", "3")
    assert code == EXIT_OK and data["result"] == "ConeCertificate"
    assert data["terms"] == [{"coeff": "1", "gen": "M(3,0,0)-M(2,1,0)"}]
    code, data = run_json(capsys, "cert", "jackcone", "--pair", "3;2,1", "--family", "m", "--n", "3",
                          "--sigma", "1")
    assert code == EXIT_VIOLATION and data["result"] == "Infeasible"
    code, data = run_json(capsys, "cert", "semiring", "--pair", "2,1;1,1,1", "--n", "3")
    assert code == EXIT_OK and data["result"] == "ConeCertificate" and data["cone"] == "tau"
    from jackmac.symfunc import normalized_monomial

    target = tmp_path / "t.json"
    target.write_text(json.dumps((normalized_monomial((2,), 2) - normalized_monomial((1, 1), 2)).to_json()))
    code, data = run_json(capsys, "cert", "muirhead", "--target-from", str(target))
    assert code == EXIT_OK and len(data["terms"]) == 1


def test_kadell_and_ahw(capsys):
    code, data = run_json(capsys, "kadell", "--lambda", "2", "--mu", "1,1", "--n", "2")
    assert code == EXIT_OK and data["difference"]["kind"] == "InCone"
    code, data = run_json(capsys, "ahw", "--lambda", "2,1", "--mu", "2,1")
    assert data["a_exact"] and data["b_exact"] and data["a_max_imag"] < 1e-9


def test_oo_quad(capsys):
    code, data = run_json(capsys, "oo-quad", "--lambda", "1", "--n", "2", "--tau", "1", "--x", "3,1")
    assert code == EXIT_OK and data["identity_error"] < 1e-8 and data["kernel_error"] < 1e-8


def test_bad_input_exit_code(capsys):
    code, _, err = run(capsys, "jack", "expand", "--lambda", "x", "--n", "2")
    assert code == EXIT_ERROR and err.startswith("error:")
    code, _, _ = run(capsys, "oo-quad", "--n", "2", "--tau", "1", "--x", "1,3")
    assert code == EXIT_ERROR


def test_scan_writes_records_and_config(capsys, tmp_path):
    out = tmp_path / "s.jsonl"
    code, data = run_json(capsys, "scan", "--conjecture", "muirhead", "--dmax", "3", "--nmax", "2", "--out",
                          str(out), "--seed", "7")
    assert code == EXIT_OK and data["summary"] == {"Certified": data["records"]}
    assert data["seed"] == 7
    lines = out.read_text().splitlines()
    assert len(lines) == data["records"]
    cfg = Config.load(str(out) + ".config.ini")
    assert (cfg.d_max, cfg.n_max, cfg.seed) == (3, 2, 7)


def test_config_file(capsys, tmp_path):
    ini = tmp_path / "c.ini"
    ini.write_text("[jackmac]\nseed = 5\nsamples = 50\n")
    cfg = Config.load(str(ini))
    assert cfg.seed == 5 and cfg.samples == 50 and cfg.d_max == 5
    code, data = run_json(capsys, "jack", "eval1", "--lambda", "1", "--n", "1", "--config", str(ini))
    assert data["seed"] == 5
    ini.write_text("[jackmac]\nsamples = 0\n")
    with pytest.raises(ValueError):
        Config.load(str(ini))
    code, _, _ = run(capsys, "jack", "eval1", "--lambda", "1", "--n", "1", "--config", str(tmp_path / "none"))
    assert code == EXIT_ERROR


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "jackmac", "jack", "eval1", "--lambda", "2", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == format_scalar(principal_specialization((2,), 2))
