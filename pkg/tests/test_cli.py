import json
import subprocess
import sys

from noncrossing import cli, verify
from noncrossing.partitions import NCPartition


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "noncrossing", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )
    return proc


def test_enumerate_nc3():
    proc = run_cli("enumerate", "nc", "3")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert len(lines) == 6
    assert json.loads(lines[-1]) == {"count": 5}
    first = json.loads(lines[0])
    assert first == {"blocks": [[1], [2], [3]], "n": 3}


def test_enumerate_ncl4_count():
    proc = run_cli("enumerate", "ncl", "4")
    assert json.loads(proc.stdout.splitlines()[-1]) == {"count": 22}


def test_enumerate_bicolor3_count():
    proc = run_cli("enumerate", "bicolor", "3")
    assert json.loads(proc.stdout.splitlines()[-1]) == {"count": 7}


def test_enumerate_text_format():
    proc = run_cli("enumerate", "nc", "2", "--format", "text")
    assert proc.stdout.splitlines() == ["(1)(2)", "(1,2)", "count 2"]


def test_enumerate_limit_exit_code():
    proc = run_cli("enumerate", "ncl", "10")
    assert proc.returncode == 2
    assert "capped at 9" in proc.stderr


def test_limit_overrides():
    proc = run_cli("enumerate", "nc", "4", "--limit", "nc=3")
    assert proc.returncode == 2
    proc = run_cli("enumerate", "nc", "4", "--limit", "nc=4")
    assert proc.returncode == 0
    # raising a cap beyond its default needs the explicit flag
    proc = run_cli("enumerate", "ncl", "10", "--limit", "ncl=10")
    assert proc.returncode == 2
    assert "--unsafe-limits" in proc.stderr


def test_env_limits(monkeypatch):
    proc = subprocess.run(
        [sys.executable, "-m", "noncrossing", "enumerate", "nc", "4"],
        capture_output=True,
        text=True,
        env={"NCL_LIMITS": "nc=3", "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 2


def test_transform_m2t_fixture():
    proc = run_cli(
        "transform", "m2t", '{"order":5,"coeffs":["1","2","5","14","42"]}'
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "order": 5,
        "coeffs": ["1", "1", "0", "0", "0"],
    }


def test_transform_m2k_and_back():
    proc = run_cli("transform", "m2k", '{"order":3,"coeffs":["1","2","5"]}')
    assert json.loads(proc.stdout)["coeffs"] == ["1", "1", "1"]
    proc2 = run_cli("transform", "k2m", proc.stdout.strip())
    assert json.loads(proc2.stdout)["coeffs"] == ["1", "2", "5"]


def test_transform_m2t_zero_first_moment_exit3():
    proc = run_cli("transform", "m2t", '{"order":2,"coeffs":["0","1"]}')
    assert proc.returncode == 3


def test_transform_stdin():
    proc = run_cli("transform", "m2t", "-", stdin='{"order":3,"coeffs":["1","1","1"]}')
    assert json.loads(proc.stdout)["coeffs"] == ["1", "0", "0"]


def test_biject_theta_roundtrip():
    proc = run_cli("biject", "theta", '{"n":3,"blocks":[[1,2],[2,3]]}')
    assert proc.returncode == 0
    tree = json.loads(proc.stdout)
    assert tree == {"children": [{"tree": {"children": [{"tree": {"children": []}}]}}]}
    proc2 = run_cli("biject", "theta-inv", proc.stdout.strip())
    assert json.loads(proc2.stdout) == {"n": 3, "blocks": [[1, 2], [2, 3]]}


def test_biject_theta_not_connected_exit4():
    proc = run_cli("biject", "theta", '{"n":3,"blocks":[[1,2],[3]]}')
    assert proc.returncode == 4


def test_biject_lambda_roundtrip():
    proc = run_cli("biject", "lambda", '{"n":6,"blocks":[[1,3,5],[2],[4],[6]]}')
    assert proc.returncode == 0
    tree = json.loads(proc.stdout)
    assert tree == {
        "children": [
            {"color": 1, "tree": {"children": []}},
            {"color": 1, "tree": {"children": []}},
        ]
    }
    proc2 = run_cli("biject", "lambda-inv", proc.stdout.strip())
    assert json.loads(proc2.stdout) == {"n": 6, "blocks": [[1, 3, 5], [2], [4], [6]]}


def test_biject_lambda_not_split_exit4():
    proc = run_cli("biject", "lambda", '{"n":4,"blocks":[[1,2],[3,4]]}')
    assert proc.returncode == 4


def test_biject_crossing_exit4():
    proc = run_cli("biject", "theta", '{"n":4,"blocks":[[1,3],[2,4]]}')
    assert proc.returncode == 4


def test_render_partition():
    proc = run_cli("render", '{"n":3,"blocks":[[1],[2],[3]]}')
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].split() == ["1", "2", "3"]


def test_render_bicolor_chain():
    tree = {
        "children": [
            {
                "color": 1,
                "tree": {"children": [{"color": 0, "tree": {"children": []}}]},
            }
        ]
    }
    proc = run_cli("render", json.dumps(tree))
    assert proc.stdout.splitlines() == ["o", "|-o", "  :-o"]


def test_bad_json_exit2():
    proc = run_cli("render", "{not json")
    assert proc.returncode == 2


def test_verify_kreweras_passes():
    proc = run_cli("verify", "kreweras", "--order", "5", "--format", "text")
    assert proc.returncode == 0
    assert "FAIL" not in proc.stdout


def test_verify_counts_json_shape():
    proc = run_cli("verify", "counts")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["pass"] is True
    assert all("identity" in e and "suite" in e for e in data["entries"])


def test_verify_determinism_same_seed():
    a = run_cli("verify", "prop21", "--order", "4", "--seed", "7")
    b = run_cli("verify", "prop21", "--order", "4", "--seed", "7")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_enumerate_determinism():
    a = run_cli("enumerate", "ncl", "4")
    b = run_cli("enumerate", "ncl", "4")
    assert a.stdout == b.stdout


def test_verify_theorem_seeded():
    proc = run_cli("verify", "theorem", "--order", "4", "--seed", "7")
    assert proc.returncode == 0


def test_convolve_tseries():
    proc = run_cli(
        "convolve",
        "--tx", '{"order":3,"coeffs":["1","1","0"]}',
        "--ty", '{"order":3,"coeffs":["2","1/2","-1/8"]}',
    )
    assert json.loads(proc.stdout) == {"order": 3, "coeffs": ["2", "5/2", "3/8"]}


def test_convolve_theorem_mode():
    proc = run_cli(
        "convolve",
        "--mx", '{"order":4,"coeffs":["1","2","5","14"]}',
        "--my", '{"order":4,"coeffs":["2","5","14","42"]}',
        "--order", "4",
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["pass"] is True


def test_convolve_requires_arguments():
    proc = run_cli("convolve")
    assert proc.returncode == 2


def test_fault_injection_reports_witness(monkeypatch, capsys):
    # a corrupted complement must turn the suite red and carry a witness
    def broken(gamma):
        return NCPartition(gamma.n, tuple((i,) for i in range(1, gamma.n + 1)))

    monkeypatch.setattr(verify, "kreweras", broken)
    code = cli.main(["verify", "kreweras", "--order", "4"])
    out = capsys.readouterr().out
    assert code == 1
    data = json.loads(out)
    assert data["pass"] is False
    assert any(e.get("witness") for e in data["entries"])
