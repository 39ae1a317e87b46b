import json
import subprocess
import sys

import pytest

from qschur.cli import RunConfig, UsageError, main, run


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dims_json(capsys):
    code, out, _ = call(capsys, "dims", "--n", "2", "--r", "3", "--lprime", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "qschur/1"
    assert doc["result"] == {"n": 2, "r": 3, "lprime": 3, "dim_u1": 17, "dim_little": 17,
                             "dim_infinitesimal": 18, "dim_little_zero": 3}


def test_json_is_deterministic(capsys):
    _, a, _ = call(capsys, "analyze", "--n", "2", "--r", "3", "--lprime", "3")
    _, b, _ = call(capsys, "analyze", "--n", "2", "--r", "3", "--lprime", "3")
    assert a == b
    doc = json.loads(a)
    assert list(doc) == sorted(doc)
    assert doc["result"]["dim"] == 17 and doc["result"]["rad_dim"] == 12


def test_dims_csv(capsys):
    code, out, _ = call(capsys, "dims", "--n", "2", "--r", "2", "--lprime", "4", "--format", "csv")
    assert code == 0
    assert out == ("n,r,lprime,dim_u1,dim_little,dim_infinitesimal,dim_little_zero\n"
                   "2,2,4,7,8,8,3\n")


def test_simples_csv_computed(capsys):
    code, out, _ = call(capsys, "simples", "--n", "2", "--r", "3", "--computed", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["label,dim,weight,block", "0 0,1,0 0,0", "2 1,2,2 1,0"]


def test_simples_index_set(capsys):
    code, out, _ = call(capsys, "simples", "--n", "3", "--r", "3")
    assert [x["label"] for x in json.loads(out)["result"]["simples"]] == [
        [0, 0, 0], [1, 1, 1], [2, 1, 0]]


def test_semisimple_text(capsys):
    code, out, _ = call(capsys, "semisimple", "--n", "2", "--r", "5", "--lprime", "4",
                        "--format", "text")
    assert code == 0 and out == "true\n"
    code, out, _ = call(capsys, "semisimple", "--n", "2", "--r", "4", "--lprime", "4",
                        "--format", "text")
    assert code == 0 and out == "false\n"


def test_blocks_with_prediction(capsys):
    code, out, _ = call(capsys, "blocks", "--n", "2", "--r", "4")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["blocks"] == res["predicted"] == [[[0, 1]], [[1, 0], [2, 2]]]


@pytest.mark.parametrize("kind", ["psi", "rho"])
def test_transfer_check(capsys, kind):
    code, out, _ = call(capsys, "transfer-check", "--kind", kind, "--n", "2", "--r", "1")
    assert code == 0
    assert json.loads(out)["result"]["homomorphism"]


def test_appendix_text(capsys):
    code, out, _ = call(capsys, "appendix-klambda", "--n", "2", "--r", "2", "--lambda", "0,2",
                        "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "k_(0, 2) = [kt1^-1;2/4]"
    assert "verified: true" in out


@pytest.mark.parametrize("argv,msg", [
    (["dims", "--n", "0"], "--n"),
    (["dims", "--r", "-1"], "--r"),
    (["dims", "--lprime", "2"], "--lprime"),
    (["blocks", "--format", "csv"], "csv"),
    (["analyze", "--field", "prime"], "characteristic-zero"),
    (["dims", "--field", "prime", "--p", "9"], "prime"),
    (["dims", "--field", "prime", "--p", "7", "--lprime", "4"], "p = 1 mod"),
    (["appendix-klambda", "--n", "2", "--r", "2", "--lambda", "3,0"], "composition"),
])
def test_usage_errors_exit_2(capsys, argv, msg):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert msg in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_prime_field_dims(capsys):
    code, out, _ = call(capsys, "dims", "--field", "prime", "--p", "7")
    assert code == 0
    assert json.loads(out)["result"]["dim_little"] == 17


def test_failed_verification_exits_1(monkeypatch):
    from qschur import verify
    from qschur.verify import CheckResult

    def broken():
        res = CheckResult("broken")
        res.expect(False, "cell (2, 3): 16 vs 17")
        return res

    monkeypatch.setitem(verify.SUITES, "little", [broken])
    code, text = run(RunConfig("verify", suite="little", fmt="text"))
    assert code == 1
    assert "FAIL broken" in text and "16 vs 17" in text


def test_verify_suite_text(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "combinatorics", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "ok"
    assert all(line.startswith(("PASS", "ok")) for line in out.splitlines())


def test_verify_parallel(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "appendix", "--jobs", "2")
    assert code == 0
    assert json.loads(out)["result"]["checks"][0]["passed"]


def test_cache_dir_roundtrip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QSCHUR_CACHE_DIR", str(tmp_path))
    code, first, _ = call(capsys, "dims", "--n", "2", "--r", "2")
    dump = tmp_path / "U_2_2.json"
    assert code == 0 and dump.exists()
    assert json.loads(dump.read_text())["n"] == 2
    code, second, _ = call(capsys, "dims", "--n", "2", "--r", "2")
    assert first == second


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = call(capsys, "dims", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["dim_little"] == 17


def test_config_validation_direct():
    assert RunConfig("dims", n=1, r=0, lprime=3).validate() is None
    with pytest.raises(UsageError):
        run(RunConfig("dims", n=2, r=2, lprime=1))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qschur", "semisimple", "--n", "2", "--r", "5",
                           "--lprime", "4", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "true\n"
