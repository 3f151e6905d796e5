import pytest

import pdnf


def test_nonresonant_normal_form_is_linear():
    nf = pdnf.normalize(["x + x^2"], ["x"], order=6)
    assert nf["certified"]
    assert [c["text"] for c in nf["normalized"]] == ["x"]
    # y = x / (1 + x) linearizes the field, so one quadratic generator suffices
    assert [g["degree"] for g in nf["generators"]] == [2]
    assert nf["transform"][0]["text"] == "x - x^2 + x^3 - x^4 + x^5 - x^6"
    assert nf["inverse_transform"][0]["text"] == "x + x^2 + x^3 + x^4 + x^5 + x^6"


def test_saddle_resonances():
    r = pdnf.resonances(["1", "-1"], 4)
    assert r["relations"] == [[1, 1], [2, 2]]
    assert r["q"] == 1
    assert r["complete"]
    assert r["lattice"] == [["1", "-1"]]


def test_complex_eigenvalues():
    r = pdnf.resonances(["i", "-i"], 6)
    assert r["q"] == 1
    assert r["r"] == 1


def test_bracket():
    assert pdnf.bracket(["x1", "-x2"], ["x1^2", "0"], ["x1", "x2"]) == ["x1^2", "0"]


def test_integrable_saddle():
    assert pdnf.integrable([["x1", "-x2"]], ["x1*x2"], ["x1", "x2"])
    assert not pdnf.integrable([["x1", "0"]], ["x1"], ["x1", "x2"])


def test_run_report():
    report = pdnf.run("vars x1 x2; field X = [x1, -x2]; mode isochore;")
    assert report["first_integral"]["g"]["text"] == "x1*x2"


def test_canonical_round_trip():
    text = pdnf.canonical("vars x;  field X = [ (x+1)^2 - 1 ] ; order 5;")
    assert pdnf.canonical(text) == text


def test_parse_error_location():
    with pytest.raises(pdnf.ParseError, match="2:15: dangling operator"):
        pdnf.run("vars x1;\nfield X = [x1 +]")


def test_engine_error():
    with pytest.raises(pdnf.Error, match="DimensionMismatch"):
        pdnf.normalize(["x1"], ["x1", "x2"])
    assert issubclass(pdnf.ParseError, pdnf.Error)
