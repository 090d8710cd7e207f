"""One line per acceptance criterion; run with ``pytest -s`` to see them."""

import pytest

from cablecross import acceptance


@pytest.mark.parametrize("number", range(1, len(acceptance.CRITERIA) + 1))
def test_criterion(number):
    result = acceptance.run_check(number)
    print(result.line())
    assert result.passed, result.line()


def test_eight_criteria():
    assert len(acceptance.CRITERIA) == 8
