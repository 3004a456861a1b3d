import json
import subprocess
import sys

import pytest

from mpdsemigroups.cli import main
from mpdsemigroups.gaps import GapSet, PFSet

FOUR = "[[2,11],[3,0],[5,9],[7,4]]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_pf_golden(capsys):
    code, out, _ = run(capsys, "pf", "--gens", FOUR)
    assert code == 0
    assert out == '{"pf":[[64,69],[77,58]],"status":"certified"}'


def test_gaps_golden(capsys):
    code, out, _ = run(capsys, "gaps", "--gens", "[[1,0],[0,1]]")
    assert code == 0 and out == '{"gaps":[],"status":"certified"}'


def test_truncated_exit_code(capsys):
    code, out, _ = run(capsys, "frobenius", "--order", "grlex", "--example", "twelve-generator")
    assert code == 2 and json.loads(out)["status"] == "truncated"


def test_errors(capsys):
    code, _, err = run(capsys, "gaps", "--gens", "[[1,0],[2,0]]")
    assert code == 1 and json.loads(err)["error"] == "non_minimal_generating_set"
    code, _, err = run(capsys, "gaps", "--gens", "[[1,0")
    assert code == 1 and json.loads(err)["error"] == "parse_error"
    code, _, err = run(capsys, "frobenius", "--gens", FOUR)
    assert code == 1 and "order" in json.loads(err)["message"]
    code, _, err = run(capsys, "gaps")
    assert code == 1


def test_round_trip(capsys):
    _, out, _ = run(capsys, "gaps", "--example", "pseudo-symmetric")
    H = GapSet.from_json(json.loads(out))
    assert len(H) == 11 and H.certified
    _, out, _ = run(capsys, "pf", "--example", "rf-example")
    assert len(PFSet.from_json(json.loads(out))) == 3


def test_file_input(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"generators": [[0, 1], [2, 0], [3, 0], [1, 3]]}))
    code, out, _ = run(capsys, "gaps", str(p))
    assert code == 0 and json.loads(out)["gaps"] == [[1, 0], [1, 1], [1, 2]]


@pytest.mark.parametrize(
    "argv, check",
    [
        (["betti", "--example", "four-generator"], lambda o: o["totals"] == [1, 5, 6, 2]),
        (["kpoly", "--example", "symmetric-s2", "--strategy", "FullConeIdentity"], lambda o: len(o["k"]) == 10),
        (["ideal", "--example", "four-generator"], lambda o: len(o["binomials"]) == 5),
        (["generic", "--example", "generic"], lambda o: o["generic"] is True),
        (["rf", "--example", "rf-example", "--pf", "5,13", "--all"], lambda o: len(o["matrices"]) == 3),
        (["rfrel", "--example", "four-generator", "--check"], lambda o: o["generated"] is True),
        (["glue", "find", "--example", "gluing"], lambda o: o["gluings"][0]["d"] == [18, 18]),
        (["glue", "verify", "--example", "gluing", "--partition", "0,1,2,3|4,5", "--d", "18,18"], lambda o: o["gluing"]),
        (["glue", "pf", "--example", "gluing"], lambda o: o["pf"] == [[49, 49]]),
        (["glue", "transfer", "--example", "gluing"], lambda o: o["value"] and len(o["witnesses"]) == 4),
        (["classify", "--example", "pseudo-symmetric", "--order", "grlex"], lambda o: o["classification"] == "PseudoSymmetric"),
        (["wilf", "--example", "symmetric-s1", "--order", "grlex"], lambda o: o["holds"]),
        (["qf", "--example", "bresinsky-2"], lambda o: len(o["qf"]) == 8),
    ],
)
def test_commands(capsys, argv, check):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert check(json.loads(out))


def test_text_formats(capsys):
    _, out, _ = run(capsys, "rf", "--example", "four-generator", "--pf", "64,69", "--format", "matrix")
    assert "[-1  4  8  2]" in out
    _, out, _ = run(capsys, "kpoly", "--example", "symmetric-s2", "--format", "text")
    assert out.startswith("1 - ")
    _, out, _ = run(capsys, "glue", "rf", "--example", "gluing", "--f", "9,9", "--g", "22,22",
                    "--choices", '{"f_plus_d": [3,0,1,0], "g_plus_d": [0,4]}', "--format", "text")
    assert len(out.splitlines()) == 6


def test_deterministic(capsys):
    outs = {run(capsys, "ideal", "--example", "generic")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "mpdsemigroups", "pf", "--gens", FOUR],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and json.loads(res.stdout)["pf"] == [[64, 69], [77, 58]]
