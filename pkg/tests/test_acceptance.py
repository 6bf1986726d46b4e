"""Acceptance criteria at full scale; one PASS/FAIL line per criterion (use -s to see them)."""
import pytest

from twisted_m0n.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion("full", 0)
    print(result.line())
    assert result.passed, result.detail
