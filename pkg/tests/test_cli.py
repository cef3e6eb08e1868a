import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

import fibquat
from fibquat.cli import COVERED_OPS, HANDLERS, build_parser, main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, stdout=out)
    return code, out.getvalue()


def test_dispatch_covers_every_public_op():
    """Each library operation must be reachable from some subcommand."""
    assert set(HANDLERS) == set(COVERED_OPS)
    covered = {op for ops in COVERED_OPS.values() for op in ops}
    missing = [op.__name__ for op in fibquat.PUBLIC_OPS if op not in covered]
    assert not missing, missing


def test_every_handler_is_parseable():
    parser = build_parser()
    actions = {}
    for action in parser._subparsers._group_actions:
        for name, sub in action.choices.items():
            subactions = sub._subparsers._group_actions[0].choices
            actions[name] = set(subactions)
    for group, sub in HANDLERS:
        assert group in actions and sub in actions[group], (group, sub)


@pytest.mark.parametrize(
    "argv,golden_name",
    [
        (["seq", "fib", "10"], "seq_fib_10.json"),
        (["identity", "range", "P21_III", "0", "0"],
         "identity_range_P21_III_0_0.json"),
        (["cert", "family", "4", "2"], "cert_family_4_2.json"),
    ],
)
def test_golden_output(argv, golden_name):
    code, text = run_cli(argv)
    assert code == 0
    assert text == (GOLDEN / golden_name).read_text()


def test_repeat_runs_are_byte_identical():
    first = run_cli(["cert", "family", "4", "2"])
    second = run_cli(["cert", "family", "4", "2"])
    assert first == second


def test_seq_subcommands():
    code, text = run_cli(["seq", "lucas", "5"])
    assert code == 0 and json.loads(text) == {"n": 5, "value": "11"}
    code, text = run_cli(["seq", "gen", "1", "0", "3"])
    assert code == 0 and json.loads(text)["value"] == "1"
    code, text = run_cli(["seq", "pair", "6"])
    assert code == 0
    assert json.loads(text) == {"n": 6, "fib": "8", "fib_next": "13"}


def test_identity_subcommands():
    code, text = run_cli(["identity", "check", "P21_IV", "3"])
    assert code == 0 and json.loads(text)["holds"] is True
    code, text = run_cli(["identity", "domain", "P21_IV"])
    assert code == 0 and json.loads(text)["min_n"] == 1
    code, text = run_cli(["identity", "f5", "3"])
    assert code == 0 and json.loads(text)["factor"] == "122"
    code, text = run_cli(["identity", "range", "P21_IX_as_printed", "0", "5"])
    assert code == 1
    blob = json.loads(text)
    assert [f["n"] for f in blob["failures"]] == [1, 2, 3, 4, 5]


def test_ring_subcommands():
    code, text = run_cli(["ring", "member", "58"])
    assert code == 0
    blob = json.loads(text)
    assert blob["ring_a"] is False and blob["ideal_m"] is False
    code, text = run_cli(["ring", "element", "1", "1", "1"])
    assert code == 0 and json.loads(text)["value"] == "95"
    code, text = run_cli(["ring", "printed", "1", "1", "1"])
    assert code == 0
    blob = json.loads(text)
    assert blob["value"] == "58" and blob["multiple_of_5"] is False
    code, _ = run_cli(["ring", "element", "1", "1"])  # not a triple
    assert code == 2


def test_quat_subcommands():
    code, text = run_cli(["quat", "mul", "0", "1", "0", "0", "0", "1", "0", "0"])
    assert code == 0
    assert json.loads(text)["result"] == ["-1", "0", "0", "0"]
    code, text = run_cli(["quat", "norm", "1", "1", "2", "3"])
    assert code == 0 and json.loads(text)["value"] == "15"
    code, text = run_cli(["quat", "conj", "1", "2", "3", "4"])
    assert json.loads(text)["result"] == ["1", "-2", "-3", "-4"]
    code, text = run_cli(["quat", "trace", "5", "2", "3", "4"])
    assert json.loads(text)["value"] == "10"
    code, text = run_cli(["quat", "add", "1", "0", "0", "0", "0", "1", "0", "0"])
    assert json.loads(text)["result"] == ["1", "1", "0", "0"]
    code, text = run_cli(["quat", "sub", "1", "0", "0", "0", "0", "1", "0", "0"])
    assert json.loads(text)["result"] == ["1", "-1", "0", "0"]
    code, text = run_cli(["quat", "fibq", "1"])
    assert json.loads(text)["coeffs"] == ["1", "1", "2", "3"]
    code, text = run_cli(["quat", "lucasq", "1", "--alpha", "2", "--beta", "3"])
    blob = json.loads(text)
    assert blob["coeffs"] == ["1", "3", "4", "7"] and blob["alpha"] == "2"
    code, text = run_cli(["quat", "normrel", "P35_1", "3"])
    assert code == 0 and json.loads(text)["holds"] is True


def test_cert_subcommands():
    code, text = run_cli(["cert", "verify", "5", "-1", "1", "1", "2"])
    assert code == 0 and json.loads(text)["verified"] is True
    code, text = run_cli(["cert", "verify", "5", "-1", "1", "1", "3"])
    assert code == 1 and json.loads(text)["verified"] is False
    code, text = run_cli(["cert", "verify", "5", "1", "0", "1", "1", "--strict"])
    assert code == 1  # nonzero triple required in strict mode
    code, text = run_cli(["cert", "search", "5", "-1", "3"])
    assert code == 0 and json.loads(text)["point"] == ["1", "1", "2"]
    code, text = run_cli(["cert", "search", "-1", "-1", "50"])
    assert code == 0 and json.loads(text)["found"] is False
    code, text = run_cli(["cert", "decide", "-1", "-1"])
    assert code == 0 and json.loads(text)["decision"] == "Division"
    code, text = run_cli(["cert", "symbol", "-1", "-1", "inf"])
    assert code == 0 and json.loads(text)["symbol"] == -1
    code, text = run_cli(["cert", "symbol", "2", "7", "7"])
    assert code == 0 and json.loads(text)["symbol"] == 1
    code, text = run_cli(["cert", "factor", "5040"])
    assert code == 0
    assert json.loads(text)["factors"] == {"2": 4, "3": 2, "5": 1, "7": 1}


def test_genseq_subcommands():
    code, text = run_cli(["genseq", "iterate", "1", "1", "0", "1", "Left", "6"])
    assert code == 0
    assert json.loads(text)["values"] == ["0", "1", "1", "2", "3", "5", "8"]
    code, text = run_cli(["genseq", "binet", "2", "1", "0", "1", "5"])
    blob = json.loads(text)
    assert code == 0 and blob["u"] == "29" and blob["v"] == "0"
    code, text = run_cli(["genseq", "limit", "1", "1", "0", "1"])
    assert code == 0
    assert abs(json.loads(text)["limit"] - 1.618033988749895) < 1e-15
    code, _ = run_cli(["genseq", "iterate", "1", "1", "0", "1", "Left", "1001"])
    assert code == 2  # trajectory cap


def test_dtype_subcommands():
    argv = ["dtype", "iterate", "units-mod:11", "2", "3", "1", "1", "0", "1",
            "Left", "5"]
    code, text = run_cli(argv)
    assert code == 0
    assert json.loads(text)["values"] == ["2", "3", "6", "7", "9", "8"]
    argv = ["dtype", "closed", "units-mod:11", "2", "3", "1", "1", "0", "1", "5"]
    code, text = run_cli(argv)
    assert code == 0 and json.loads(text)["value"] == "8"
    code, text = run_cli(["dtype", "dseq", "1", "1", "2", "1", "5"])
    assert code == 0 and json.loads(text)["value"] == "11"
    code, _ = run_cli(["dtype", "iterate", "units-mod:11", "5", "3", "1", "1",
                       "0", "1", "Left", "2"])
    assert code == 0
    code, _ = run_cli(["dtype", "iterate", "units-mod:12", "2", "3", "1", "1",
                       "0", "1", "Left", "2"])
    assert code == 2  # 2 is not a unit mod 12


def test_usage_errors_exit_2():
    assert run_cli(["bogus"])[0] == 2
    assert run_cli(["seq", "fib"])[0] == 2
    assert run_cli(["seq", "fib", "notanint"])[0] == 2
    assert run_cli(["seq", "fib", "10000001"])[0] == 2  # index bound
    assert run_cli(["identity", "check", "NOPE", "1"])[0] == 2
    assert run_cli(["cert", "family", "8", "3"])[0] == 2  # must pick 8a/8b
    assert run_cli(["cert", "symbol", "2", "3", "four"])[0] == 2
    assert run_cli(["cert", "verify", "0", "1", "1", "1", "1"])[0] == 2


def test_undecided_exits_3():
    big = str(fibquat.lucas(461))
    code, text = run_cli(["cert", "factor", big, "--budget", "500"])
    assert code == 3
    blob = json.loads(text)
    assert blob["undecided"] is True and blob["spent"] > blob["limit"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibquat", "seq", "fib", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "seq_fib_10.json").read_text()
