import pathlib

import pytest

import bcforge

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def test_presets_listed():
    names = bcforge.preset_names()
    assert len(names) == 15
    assert "nakamura-cs-case3" in names


def test_case1_bott_chern_column():
    m = bcforge.Model.preset("nakamura-cs-case1")
    r = bcforge.table(m, ["bc"])
    assert r["schema"] == "report-v1"
    column = r["bigraded"]["bc"]
    assert column == [1, 1, 1, 3, 7, 3, 1, 9, 9, 1, 3, 11, 3, 5, 5, 1]
    assert all(inv["pass"] for inv in r["invariants"])


def test_ddbar_verdicts():
    case3 = bcforge.ddbar(bcforge.Model.preset("nakamura-cs-case3"))
    assert case3["ddbar"]["verdict"] == "SATISFIED"
    case_a = bcforge.ddbar(bcforge.Model.preset("nakamura-cp-caseA"))
    degrees = dict(case_a["ddbar"]["degrees"])
    assert [degrees[k] for k in range(1, 6)] == [8, 20, 24, 20, 8]


def test_compare_sub_model():
    sub = bcforge.Model.preset("nakamura-cp-caseB-Bgamma")
    ambient = bcforge.Model.preset("nakamura-cp-caseB")
    r = bcforge.compare(sub, ambient, ["delbar"])
    assert r["induced"]
    assert all(e["bijective"] for e in r["induced"])


def test_text_and_csv_formats():
    m = bcforge.Model.preset("nakamura-cs-case2")
    assert "verdict: VIOLATED" in bcforge.ddbar(m, format="text")
    assert bcforge.table(m, ["delbar"], format="csv").startswith("section,p,q,k,theory,value")


def test_model_from_file_and_round_trip():
    m = bcforge.Model.from_file(str(DATA / "iwasawa.json"))
    assert m.n == 3
    assert m.generator_count == 64
    again = bcforge.Model.from_json(m.to_json())
    assert again.to_json() == m.to_json()
    assert bcforge.validate(m)["invariants"][0]["pass"]


def test_errors():
    with pytest.raises(bcforge.UnknownPreset):
        bcforge.Model.preset("nakamura-cs-case9")
    with pytest.raises(bcforge.ModelValidationError, match="del"):
        bcforge.Model.from_file(str(DATA / "broken_d_squared.json"))
    with pytest.raises(bcforge.UnresolvableGenerator):
        bcforge.compare(bcforge.Model.preset("nakamura-cs-case1"), bcforge.Model.preset("nakamura-cs-case1-Agamma"))
    with pytest.raises(ValueError):
        bcforge.table(bcforge.Model.preset("nakamura-cs-case3"), ["hodge"])
