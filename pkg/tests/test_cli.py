import json
import subprocess
import sys

import pytest

from jmclass.cli import run
from jmclass.expansion import ReducedExpansion
from jmclass.groupalg import ClassExpansion
from jmclass.partitions import Partition


def out_of(capsys, argv, code=0):
    assert run(argv) == code
    return capsys.readouterr()


def test_expand_tsv(capsys):
    out = out_of(capsys, ["expand", "--family", "p", "--k", "2", "--n", "4"]).out
    assert out.splitlines() == ["3,1\t1", "1,1,1,1\t6"]


def test_expand_closed_matches_engine(capsys):
    a = json.loads(out_of(capsys, ["expand", "--family", "e", "--k", "2", "--n", "5",
                                   "--method", "closed", "--format", "json"]).out)
    b = json.loads(out_of(capsys, ["expand", "--family", "e", "--k", "2", "--n", "5",
                                   "--format", "json"]).out)
    assert a["coeffs"] == b["coeffs"]


def test_reduced_json_round_trip(capsys):
    data = json.loads(out_of(capsys, ["reduced", "--family", "hl", "--k", "4", "--format", "json"]).out)
    r = ReducedExpansion.from_json(data)
    assert r[Partition((5,))].subs("z", 0) == 14


def test_oracle_json(capsys):
    data = json.loads(out_of(capsys, ["oracle", "--family", "hl", "--k", "3", "--n", "5",
                                      "--format", "json"]).out)
    e = ClassExpansion.from_json(data)
    assert e.n == 5


def test_usage_errors(capsys):
    assert out_of(capsys, ["oracle", "--family", "p", "--k", "1", "--n", "9"], 2).err
    assert out_of(capsys, ["expand", "--family", "hook", "--k", "2", "--n", "4"], 2).err
    assert out_of(capsys, ["expand", "--family", "p", "--k", "-1", "--n", "4"], 2).err
    assert out_of(capsys, ["genfun", "--family", "p", "--rho", "2,x"], 2).err
    assert out_of(capsys, ["expand", "--family", "h", "--k", "2", "--n", "3",
                           "--method", "closed"], 2).err
    assert out_of(capsys, ["nope"], 2).err


def test_catalan(capsys):
    out = out_of(capsys, ["catalan", "--max-r", "20", "--check"]).out
    assert out.strip().endswith("yes")
    data = json.loads(out_of(capsys, ["catalan", "--max-r", "4", "--format", "json"]).out)
    assert len(data["catalan"]) == 5


def test_genfun(capsys):
    out = out_of(capsys, ["genfun", "--family", "hl", "--rho", "2,2", "--order", "14",
                          "--check-fixtures", "--format", "json"]).out
    assert json.loads(out)["fixture_match"] is True
    out = out_of(capsys, ["genfun", "--family", "p", "--rho", "2", "--order", "6"]).out
    assert out.splitlines()[0] == "t^1\t1"


def test_moments(capsys):
    out = out_of(capsys, ["moments", "--k", "4", "--n", "4"]).out
    assert all(line.endswith("ok") for line in out.splitlines())
    out = out_of(capsys, ["moments", "--k", "2"]).out
    assert out.splitlines() == ["1\t1"]


def test_chartable(capsys):
    out = out_of(capsys, ["chartable", "--n", "3"]).out
    assert out.splitlines()[1:] == ["3\t1\t1\t1", "2,1\t-1\t0\t2", "1,1,1\t1\t-1\t1"]


def test_verify_small(capsys):
    out = out_of(capsys, ["verify", "--suite", "oracle", "--max-n", "4", "--max-k", "3"]).out
    assert out.splitlines()[-1].endswith("0 failed")
    assert out_of(capsys, ["verify", "--suite", "oracle", "--max-n", "9"], 2).err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jmclass", "reduced", "--family", "p", "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["3\t1", "1,1\t1"]
