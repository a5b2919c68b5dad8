from __future__ import annotations

import pytest

from postlie.golden import golden_cases


@pytest.mark.parametrize("case", golden_cases(), ids=lambda c: c.name)
def test_golden(case):
    ok, got = case.check()
    assert ok, got
