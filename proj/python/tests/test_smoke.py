from fractions import Fraction

import pytest

import lacuna

E50 = 10**50


def test_huge_exponent_factor():
    f = (
        f"1 + 2*x + 2*y + x^2 + 2*x*y + y^2 + x^{E50} + 2*x^{E50 + 1} + 2*x^{E50}*y"
        f" + x^{E50 + 2} + 2*x^{E50 + 1}*y + x^{E50}*y^2"
    )
    report = lacuna.factors(f, [1, 1])
    assert report["multidimensional"] == [{"poly": "x + y + 1", "mult": 2}]
    assert report["unidimensional"] == []
    assert report["certificates"][0]["mode"] == "probabilistic"
    assert list(report) == [
        "monomial", "unidimensional", "multidimensional", "residual",
        "unresolved", "certificates", "warnings", "meta",
    ]


def test_monomial_and_unidimensional():
    report = lacuna.factors("x^3*y + x^4*y + x^3*y^2 + x^4*y^2", [1, 1])
    assert report["monomial"] == {"x1": "3", "x2": "1"}
    assert [u["poly"] for u in report["unidimensional"]] == ["x + 1", "y + 1"]


def test_partitions():
    assert lacuna.partition("x + y + x^21 + x^20*y", 1) == ["x + y", "x^21 + x^20*y"]
    assert lacuna.partition("x^2 + y^4", Fraction(1, 2)) == ["x^2 + y^4"]
    assert lacuna.partition("x + y", Fraction(1, 2)) == ["y", "x"]
    assert lacuna.bipartition("1 + x + y + x^30 + x^31 + x^30*y", 0) == [
        "x + y + 1",
        "x^31 + x^30*y + x^30",
    ]
    parts = lacuna.multivariate_partition("1 + x + y + x^1000 + x^1001 + x^1000*y", [1, 1])
    assert parts == ["x + y + 1", "x + y + 1"]
    assert lacuna.gamma(3) == 16
    assert lacuna.gamma(2, 2, 3) == 24


def test_verify_and_dense():
    verdicts = lacuna.verify("x^2 + 2*x*y + y^2", [("x + y", 2), ("x + y", 3), ("x - y", 1)])
    assert [v["verdict"] for v in verdicts] == ["match", "mismatch", "mismatch"]
    assert [v["found"] for v in verdicts] == [2, 2, 0]
    unit, found, stripped = lacuna.factor_dense("x^4 - 1")
    assert unit == "1"
    assert sorted(found) == [("x + 1", 1), ("x - 1", 1), ("x^2 + 1", 1)]


def test_errors():
    with pytest.raises(lacuna.ParseError):
        lacuna.normalize("x + * y")
    with pytest.raises(lacuna.GuardExceeded):
        lacuna.factor_dense(f"1 + x^{E50}")
    assert issubclass(lacuna.EngineLimitation, lacuna.GuardExceeded)
    assert issubclass(lacuna.ParseError, lacuna.LacunaError)
