import json
import subprocess
import sys

import pytest

from sweepmap.cli import main


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "sweepmap", *args], input=stdin,
                          capture_output=True, text=True)


def test_sweep_example():
    r = run("sweep", "--mod", "5", "3113214")
    assert (r.returncode, r.stdout) == (0, "1331421\n")


def test_empty_word():
    r = run("sweep", "--mod", "5", "")
    assert r.returncode == 0 and r.stdout.strip() == ""


def test_pipe_roundtrip_bytes():
    words = "3113214\n0000\n\n4401\n1,2,3\n"
    a = run("sweep", "--mod", "5", "-", stdin=words)
    b = run("unsweep", "--mod", "5", "-", stdin=a.stdout)
    assert a.returncode == b.returncode == 0
    assert b.stdout == words


def test_schedule_latest():
    r = run("schedule", "latest", "--hours", "5", "1,3,3,1,4,2,1")
    assert r.stdout == "1,2,2,4,5,5,5\n"


def test_exit_codes():
    assert run("sweep", "--mod", "5", "39").returncode == 1
    assert run("sweep", "3113214").returncode == 2
    assert run("unpresweep", "--mod", "5", "13|31|4|2|1").returncode == 1
    assert run("zeta", "--a", "3", "--b", "-2", "--", "-2,3,3,-2,-2").returncode == 1


def test_json_output():
    r = run("--json", "sweep", "--mod", "5", "3113214")
    assert json.loads(r.stdout)["output"] == [1, 3, 3, 1, 4, 2, 1]


def test_lattice_dot():
    r = run("lattice", "--mod", "5", "--dot", "1331421")
    assert r.stdout.count("->") == 5


def test_verify_zeta():
    r = run("verify", "zeta", "3,-2", "3,-5")
    assert r.returncode == 0 and r.stdout.rstrip().endswith("result: PASS")


@pytest.mark.parametrize("argv,out", [
    (["presweep", "--mod", "5", "--pretty", "3113214"], "1|33|·|1|421"),
    (["leftmost", "-m", "5", "1331421"], "13|31|4|2|1"),
    (["successful", "-m", "5", "1331421"], "1|33||1|421"),
    (["zsweep", "--content", "3:2,-2:3", "--", "3,-2,3,-2,-2"], "3,3,-2,-2,-2"),
    (["unzsweep", "--content", "3:2,-2:3", "--", "3,3,-2,-2,-2"], "3,-2,3,-2,-2"),
    (["unzeta", "--a", "3", "--b", "-2", "--", "3,3,-2,-2,-2"], "3,-2,3,-2,-2"),
    (["schedule", "check", "--hours", "5", "--starts", "1,2,2,4,5,5,5", "1,3,3,1,4,2,1"],
     "successful; watch order 5,4,6,2,7,1,3"),
])
def test_in_process(capsys, argv, out):
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == out


def test_dyck_commands(capsys):
    assert main(["dyck", "enumerate", "--a", "3", "--b", "-2"]) == 0
    assert capsys.readouterr().out.split() == ["3,-2,3,-2,-2", "3,3,-2,-2,-2"]
    assert main(["dyck", "filter", "--content", "1:1,-1:1", "--", "1,-1", "-1,1"]) == 0
    assert capsys.readouterr().out.split() == ["1,-1"]


def test_array_ascii(capsys):
    assert main(["array", "--mod", "5", "--ascii", "13|31|4|2|1"]) == 0
    out = capsys.readouterr().out
    assert "2 # # # . ." in out and out.rstrip().endswith("equitable")


def test_run_captures_output():
    from sweepmap.cli import run as run_inline

    assert run_inline(["sweep", "--mod", "5", "3113214"]) == (0, "1331421\n")
    code, out = run_inline(["verify", "bijective", "-m", "2", "-n", "1..3"])
    assert code == 0 and "words=14" in out
