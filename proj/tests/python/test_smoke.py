import os

import pytest

import eqorbit

FIXTURE = os.path.join(os.environ.get("EQORBIT_TEST_DATA", ""), "kazarian_a2_a3.json")


def test_a6_row():
    r = eqorbit.compute("A6")
    assert r["p_factored"] == "336(9c1^3+12c1c2-11c3)(2c1^3+c1c2+c3)"
    assert r["predegree"] == "1785"
    assert r["aut"] == 3


def test_points_convention():
    assert eqorbit.compute("points:1,1,1")["p_text"] == "6"
    assert eqorbit.compute("points:2,1,1")["p_text"] == "24u+24v"
    assert eqorbit.compute("points:2,1,1", flip_sign=True)["p_text"] == "-24u-24v"


def test_flex_relation_from_table():
    rows = {r["id"]: eqorbit.poly_terms(r["p"]) for r in eqorbit.table("quartics")}
    expected = dict(rows["AN"])
    for k, v in rows["D6"].items():
        expected[k] = expected.get(k, 0) + 2 * v
    assert rows["flex"] == {k: v for k, v in expected.items() if v}


def test_sections():
    rows = {r["id"]: r for r in eqorbit.table("sections")}
    assert rows["general"]["section_count"] == "510720"


def test_canonical_poly():
    j = eqorbit.canonical_poly([("x", 1), ("y", 1)], "(x+y)^2")
    assert [t["coeff"] for t in j["terms"]] == ["1/1", "2/1", "1/1"]


def test_errors():
    with pytest.raises(ValueError):
        eqorbit.compute("bogus")
    with pytest.raises(ValueError):
        eqorbit.verify("nonsense")


def test_verify_and_fixture():
    assert eqorbit.verify("cubics")["ok"]
    if os.path.exists(FIXTURE):
        rows = {r["id"]: r for r in eqorbit.table("cubics", kazarian_file=FIXTURE)}
        assert rows["cubic:cuspidal"]["p_text"] == "24c1^2"
