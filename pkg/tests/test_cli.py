import csv
import io
import json
import subprocess
import sys

import pytest

from quotientrule.cli import main
from quotientrule.identities import IdentityReport
from quotientrule.jets import DerivativeJet
from quotientrule.partitions import Partition
from quotientrule.special import LogReciprocalExpansion


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_partitions_json(capsys):
    code, out, _ = run(capsys, "partitions", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 5 and len(doc["partitions"]) == 5
    for rec in doc["partitions"]:
        p = Partition.from_json(rec["partition"])
        assert p.target == 4 and rec["pi"] == 4
        assert set(rec["weights"]) == {"c", "c_bar", "p", "p_bar", "q", "q_bar"}


def test_partitions_zero(capsys):
    code, out, _ = run(capsys, "partitions", "0", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [r["partition"] for r in doc["partitions"]] == [{"n": 0, "mult": []}]


def test_partitions_pretty_zero_has_one_record(capsys):
    code, out, _ = run(capsys, "partitions", "0")
    assert code == 0 and "partitions of 0: 1" in out


def test_partitions_negative_is_usage_error(capsys):
    code, _, err = run(capsys, "partitions", "-1")
    assert code == 2 and "usage" in err


def test_partitions_csv(capsys):
    code, out, _ = run(capsys, "partitions", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 3
    assert rows[0]["mult"] == "0;0;1"
    assert rows[1] == {"mult": "1;1;0", "r": "2", "pi": "3", "multinomial": "2",
                       "c": "1/2", "c_bar": "1/2", "p": "1/2", "p_bar": "1/2", "q": "1/2", "q_bar": "1/2"}


def test_reciprocal(capsys):
    code, out, _ = run(capsys, "reciprocal", "--v", "2,1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] is True
    assert doc["result"]["d"] == ["1/2", "-1/4"]
    assert DerivativeJet.from_json(doc["result"]) == DerivativeJet(["1/2", "-1/4"])


def test_reciprocal_exp_jet(capsys):
    code, out, _ = run(capsys, "reciprocal", "--v", "1,1,1", "--format", "json")
    assert code == 0 and json.loads(out)["result"]["d"] == ["1", "-1", "1"]


def test_reciprocal_at_zero(capsys):
    code, _, err = run(capsys, "reciprocal", "--v", "0,1")
    assert code == 2 and "v ≠ 0" in err


def test_reciprocal_negative_values_with_equals(capsys):
    code, out, _ = run(capsys, "reciprocal", "--v=-2,1")
    assert code == 0 and "[-1/2, -1/4]" in out


def test_reciprocal_bad_literal(capsys):
    code, _, _ = run(capsys, "reciprocal", "--v", "1.5,2")
    assert code == 2


def test_quotient(capsys):
    code, out, _ = run(capsys, "quotient", "--u", "0,1,0", "--v", "1,1,1", "--format", "json")
    assert code == 0 and json.loads(out)["result"]["d"] == ["0", "1", "-2"]
    code, out, _ = run(capsys, "quotient", "--u", "1,2,3", "--v", "1,0,0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["value"] for r in rows] == ["1", "2", "3"]


def test_quotient_usage_errors(capsys):
    assert run(capsys, "quotient", "--u", "1", "--v", "2,1")[0] == 2
    assert run(capsys, "quotient", "--u", "1,1", "--v", "0,1")[0] == 2


def test_identities_exp(capsys):
    code, out, _ = run(capsys, "identities", "exp", "--max-n", "25", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] is True and len(doc["reports"]) == 26
    for rec in doc["reports"]:
        assert IdentityReport.from_json(rec).holds


def test_identities_alternating_values(capsys):
    code, out, _ = run(capsys, "identities", "alternating", "--max-n", "10", "--format", "json")
    values = [r["lhs"] for r in json.loads(out)["reports"]]
    assert code == 0 and values == ["1", "-1"] + ["0"] * 9


def test_identities_all_csv(capsys):
    code, out, _ = run(capsys, "identities", "all", "--max-n", "5", "--max-m", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and all(r["holds"] == "true" for r in rows)
    assert {r["name"] for r in rows} == {"exp", "power", "inverse-power", "central", "alternating",
                                         "lemma", "composition"}


def test_identities_unknown(capsys):
    assert run(capsys, "identities", "nosuch")[0] == 2


def test_logcoeffs(capsys):
    code, out, _ = run(capsys, "logcoeffs", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["match"] is True
    assert doc["partition"]["a"] == {"2": "1", "3": "2"}
    assert LogReciprocalExpansion.from_json(doc["fengqi"]) == LogReciprocalExpansion.from_json(doc["partition"])
    code, out, _ = run(capsys, "logcoeffs", "1", "--format", "json")
    assert json.loads(out)["fengqi"]["a"] == {"2": "1"}


def test_logcoeffs_zero(capsys):
    assert run(capsys, "logcoeffs", "0")[0] == 2


@pytest.mark.parametrize("argv", [
    ["partitions", "6", "--format", "json"],
    ["identities", "all", "--max-n", "6"],
    ["logcoeffs", "7", "--format", "csv"],
    ["quotient", "--u", "1,2,3,4", "--v", "2,-1/3,5,1"],
])
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quotientrule", "reciprocal", "--v", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verified: true" in proc.stdout
