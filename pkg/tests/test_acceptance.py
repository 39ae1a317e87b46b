"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from qschur.verify import ACCEPTANCE

CRITERIA = [
    (1, "dimension theorem"),
    (2, "sandwich and parity"),
    (3, "simple-module classification"),
    (4, "semisimplicity"),
    (5, "blocks"),
    (6, "projective and Ext structure"),
    (7, "baby Weyl modules"),
    (8, "transfer maps"),
    (9, "baby Schur functor"),
    (10, "appendix certificates"),
    (11, "identity suite"),
]


@pytest.mark.parametrize("number,title,check", [(n, t, c) for (n, t), c in
                                                zip(CRITERIA, ACCEPTANCE)],
                         ids=[f"criterion{n:02d}" for n, _ in CRITERIA])
def test_criterion(number, title, check, acceptance_log):
    result = check()
    line = f"criterion {number:2d} {'PASS' if result.passed else 'FAIL'}: {title}"
    print(line)
    acceptance_log.append(line)
    assert result.passed, "\n".join(result.failures)


def test_all_criteria_registered():
    assert len(ACCEPTANCE) == len(CRITERIA) == 11
