"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` for the summary only.
"""

import sys

import pytest

from multicatalan.acceptance import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    title, fn = CRITERIA[number]
    ok, detail = fn()
    with capsys.disabled():
        print(f"\ncriterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    from multicatalan.acceptance import run

    results = run()
    sys.exit(0 if all(ok for ok, _ in results.values()) else 1)
