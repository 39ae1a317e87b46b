from qschur.verify import (
    SUITES, CheckResult, binomial_identities, check_blocks, divided_power_identities,
    predicted_blocks_n2, run_suite,
)


def test_predicted_blocks():
    assert predicted_blocks_n2(3, 3) == [[(0, 0), (2, 1)]]
    assert predicted_blocks_n2(6, 3) == [[(0, 0), (2, 1)], [(1, 2)]]
    assert predicted_blocks_n2(0, 3) == [[(0, 0)]]


def test_identity_helpers_are_clean():
    assert binomial_identities(6) == []
    assert divided_power_identities() == []


def test_check_result_records_failures():
    res = CheckResult("demo")
    assert res.expect(True, "fine")
    assert not res.expect(False, "broken cell")
    assert not res.passed and res.failures == ["broken cell"]
    assert res.line().startswith("FAIL demo")
    assert res.to_json()["failures"] == ["broken cell"]


def test_checks_accept_smaller_grids():
    res = check_blocks(rs=range(2, 4))
    assert res.passed
    assert set(res.details) == {"r=2", "r=3"}


def test_suites():
    assert set(SUITES) == {"combinatorics", "schur-core", "little", "representation",
                           "transfer", "appendix", "all"}
    assert all(r.passed for r in run_suite("schur-core"))
