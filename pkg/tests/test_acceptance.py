"""Acceptance gate: every criterion, exact equality, with its runtime budget."""

import json

import pytest

from quotientrule import acceptance
from quotientrule.cli import main


@pytest.mark.parametrize("number", [num for num, *_ in acceptance.CRITERIA])
def test_criterion(number):
    result = acceptance.run_criterion(number)
    status = "PASS" if result.passed else "FAIL"
    budget = f", budget {result.budget:.0f}s" if result.budget else ""
    print(f"\n[{status}] criterion {number}: {result.name} ({result.seconds:.2f}s{budget}) - {result.detail}")
    assert result.passed, result.detail


def test_verify_command_exits_zero(capsys):
    code = main(["verify", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    print(f"\n[{'PASS' if code == 0 else 'FAIL'}] criterion 8: verify subcommand exit code {code}")
    assert code == 0 and doc["verified"] is True
    assert [c["criterion"] for c in doc["criteria"]] == list(range(1, 9))
