import pytest

from tetraposet import verify
from tetraposet.verify import Certificate, check, effective_nmax, run_suite


@pytest.mark.parametrize("suite, nmax", [("formulas", 5), ("expansions", 4), ("trapezoid", 5), ("bijections", 4)])
def test_suites_pass(suite, nmax):
    cert = run_suite(suite, nmax)
    assert cert.passed, cert.first_failure
    assert all("computed" in c and "oracle" in c for c in cert.checks)


def test_formulas_suite_size():
    cert = run_suite("formulas", 5)
    assert len(cert.checks) >= 40


def test_trapezoid_suite_covers_every_k():
    cert = run_suite("trapezoid", 5)
    assert sorted((c["params"]["n"], c["params"]["k"]) for c in cert.checks) == [
        (n, k) for n in range(1, 6) for k in range(n)
    ]


def test_env_cap(monkeypatch):
    monkeypatch.setenv("TETRAPOSET_NMAX", "3")
    assert effective_nmax(6) == 3
    assert run_suite("trapezoid", 6).inputs["n_max"] == 3
    monkeypatch.delenv("TETRAPOSET_NMAX")
    assert effective_nmax(6) == 6


def test_pool_matches_serial():
    a = run_suite("formulas", 4)
    b = run_suite("formulas", 4, jobs=3)
    assert a.checks == b.checks


def test_first_failure_is_reported():
    cert = Certificate("verify", {})
    cert.checks = [check("a", {"n": 1}, 1, 1), check("b", {"n": 2}, 3, 4), check("c", {"n": 3}, 0, 1)]
    assert not cert.passed
    assert cert.first_failure["params"] == {"n": 2}
    data = cert.to_json()
    assert data["pass"] is False and data["first_failure"]["computed"] == 3


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything", 3)


def test_suite_names():
    assert verify.SUITES == ("formulas", "bijections", "expansions", "trapezoid")


def test_observations_never_fail_a_certificate():
    cert = Certificate("verify", {}, [check("a", {}, 1, 1), check("b", {}, 1, 2, observation=True)])
    assert cert.passed and cert.first_failure is None
    assert cert.checks[1]["observation"] and not cert.checks[1]["pass"]


def test_formulas_suite_reports_q_tspp():
    cert = run_suite("formulas", 4)
    obs = [c for c in cert.checks if c.get("observation")]
    assert len(obs) == 4 and all(c["pass"] for c in obs)
