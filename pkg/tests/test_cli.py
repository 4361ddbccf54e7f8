"""
Command line subcommands, exit codes and output formats
"""
import json

import pytest


def _run(capsys, *argv):
    from zforce.cli import main

    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_znumber(capsys):
    """Test Z of C7"""
    status, out, _ = _run(capsys, "znumber", "--gen", "cycle:7")
    assert status == 0
    assert out.splitlines() == ["Z = 2", "witness = {0, 1}"]

def test_zbar(capsys):
    """Test Z̄ of K4 ∪ 2K1 on every route"""
    for route in ("auto", "scan", "forts", "both"):
        status, out, _ = _run(capsys, "zbar", "--gen", "complete_union_isolates:4,2", "--route", route)
        assert status == 0
        assert out.splitlines()[0] == "Z̄ = 5"

def test_closure_and_checks(capsys):
    """Test closure, check-zfs, reverse and shrink on C5"""
    status, out, _ = _run(capsys, "closure", "--gen", "cycle:5", "--set", "0,1")
    assert status == 0
    assert out.splitlines() == [
        "closure = {0, 1, 2, 3, 4}",
        "forces = (0->4) (1->2) (2->3)",
        "zero forcing = yes",
        "propagation steps = 2",
    ]
    _, out, _ = _run(capsys, "check-zfs", "--gen", "cycle:5", "--set", "0,2")
    assert out.splitlines() == ["zero forcing = no", "minimal = no"]
    _, out, _ = _run(capsys, "reverse", "--gen", "cycle:5", "--set", "0,1")
    assert out.strip() == "reversal = {3, 4}"
    _, out, _ = _run(capsys, "shrink", "--gen", "cycle:5", "--set", "0,1,2")
    assert out.strip() == "minimal = {1, 2}"

def test_reverse_requires_zero_forcing_set(capsys):
    """Test reverse on a non-forcing set exits 2"""
    status, _, err = _run(capsys, "reverse", "--gen", "cycle:5", "--set", "0,2")
    assert status == 2
    assert err.startswith("zforce: ")

def test_forts(capsys):
    """Test minimal fort listing on P4"""
    _, out, _ = _run(capsys, "forts", "--gen", "path:4", "--minimal")
    assert out.splitlines() == ["minimal forts = 2", "fort 1 = {0, 1, 3}", "fort 2 = {0, 2, 3}"]

def test_count_and_enumerate(capsys):
    """Test minimal set counting and streaming enumeration on P4"""
    _, out, _ = _run(capsys, "count-minimal", "--gen", "path:4")
    assert out.strip() == "minimal zero forcing sets = 3"
    _, out, _ = _run(capsys, "enumerate-minimal", "--gen", "path:4", "--stream")
    assert out.splitlines() == ["{0}", "{3}", "{1, 2}"]
    _, out, _ = _run(capsys, "enumerate-minimal", "--gen", "path:4", "--format", "report")
    assert json.loads(out) == {"graph": "path:4", "count": 3, "sets": [[0], [3], [1, 2]]}

def test_input_file(capsys, tmp_path):
    """Test several graphs from one file are labeled per block"""
    path = tmp_path / "graphs.g6"
    path.write_text("A_\nBw\n")
    status, out, _ = _run(capsys, "znumber", "--input", str(path))
    assert status == 0
    blocks = out.strip().split("\n\n")
    assert blocks[0].splitlines()[0] == f"# {path}:1"
    assert "Z = 1" in blocks[0]
    assert "Z = 2" in blocks[1]

def test_report_format(capsys):
    """Test --format report prints JSON"""
    _, out, _ = _run(capsys, "znumber", "--gen", "path:5", "--format", "report")
    assert json.loads(out) == {"graph": "path:5", "Z": 1, "witness": [0]}

def test_gen(capsys):
    """Test gen writes graph6 or an edge list"""
    _, out, _ = _run(capsys, "gen", "--gen", "complete:3")
    assert out.strip() == "Bw"
    _, out, _ = _run(capsys, "gen", "--gen", "path:3", "--edges")
    assert out.splitlines() == ["n 3", "0 1", "1 2"]

def test_verify(capsys):
    """Test verify runs a claim with extra parameters"""
    status, out, _ = _run(capsys, "verify", "cycle_count", "--n", "5..10", "--deterministic")
    assert status == 0
    assert out.splitlines()[:4] == ["claim = cycle_count", "params = n=5..10", "verdict = pass", "witnesses = 6"]
    assert "elapsed" not in out

def test_verify_report_deterministic_across_workers(capsys):
    """Test deterministic reports do not depend on the worker count"""
    outputs = []
    for workers in ("1", "2"):
        status, out, _ = _run(
            capsys, "verify", "isolate_iff", "--max-n", "5", "--workers", workers, "--format", "report", "--deterministic"
        )
        assert status == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["params"] == {"max_n": 5, "up_to_iso": False}

def test_verify_failing_claim_exits_1(capsys, monkeypatch):
    """Test a failing claim exits 1 and prints its counterexample"""
    from zforce import claims

    def driver(evidence, n: int = 2):
        evidence.expect(n < 2, n=n)

    monkeypatch.setitem(claims._CLAIMS, "always_fails", driver)
    status, out, _ = _run(capsys, "verify", "always_fails")
    assert status == 1
    assert "verdict = fail" in out
    assert 'counterexample = {"n": 2}' in out

def test_usage_errors_exit_2(capsys):
    """Test missing inputs, unknown claims and bad parameters exit 2"""
    for argv in (
        ["znumber"],
        ["zbar", "--gen", "nope:3"],
        ["closure", "--gen", "cycle:5"],
        ["verify"],
        ["verify", "no_such_claim"],
        ["verify", "cycle_count", "--m", "3"],
        ["znumber", "--gen", "cycle:5", "--bogus", "1"],
        ["sweep", "nothing"],
        ["sweep", "isolates", "--max-n", "7"],
        ["znumber", "--gen", "cycle:5", "--input", "x.g6"],
    ):
        status, _, err = _run(capsys, *argv)
        assert status == 2, argv
        assert err.startswith("zforce: ")

def test_argparse_errors():
    """Test unknown subcommands and formats are rejected by argparse"""
    from zforce.cli import main

    with pytest.raises(SystemExit):
        main(["frobnicate"])
    with pytest.raises(SystemExit):
        main(["znumber", "--format", "xml"])

def test_enumeration_cap_flag(capsys):
    """Test --cap lowers the enumeration cap for one run"""
    status, _, err = _run(capsys, "zbar", "--gen", "cycle:7", "--cap", "5")
    assert status == 2
    assert "cap" in err
    status, _, _ = _run(capsys, "zbar", "--gen", "cycle:7")
    assert status == 0

def test_sweep_report(capsys):
    """Test sweep prints one report for a property"""
    status, out, _ = _run(capsys, "sweep", "zbar_extremal", "--max-n", "4", "--format", "report", "--deterministic")
    assert status == 0
    data = json.loads(out)
    assert data["claim"] == "zbar_extremal"
    assert data["witnesses"] == [{"orders": "1..4", "checked": 1 + 2 + 8 + 64, "matched": 1 + 4 + 11}]

def test_sweep_stream(capsys):
    """Test streamed sweeps print one JSON line per isomorphism class"""
    status, out, _ = _run(capsys, "sweep", "isolates", "--stream", "--up-to-iso", "--max-n", "3")
    assert status == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 1 + 2 + 4
    assert lines[0] == {
        "graph6": "@", "order": 1, "z": 1, "zbar": 1, "minimal_count": 1, "matched": True, "failure": None,
    }
    assert [line["order"] for line in lines] == [1, 2, 2, 3, 3, 3, 3]

def test_sweep_progress(capsys):
    """Test progress bars go to stderr and leave stdout untouched"""
    from zforce.cli import RunConfig, run

    status, out = run(RunConfig(command="sweep", target="isolates", max_n=3, stream=True, progress=True))
    err = capsys.readouterr().err
    assert status == 0
    assert len(out.splitlines()) == 1 + 2 + 8
    assert "order 3" in err

    _, _, err = _run(capsys, "sweep", "isolates", "--max-n", "3")
    assert "order" not in err
