import json
import pathlib

import pytest

import lexntf

SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "schema" / "report.schema.json"
GENS = "x1*x3,x1*x4,x2^2"


def test_lexsegment_and_classify():
    assert lexntf.lexsegment(4, "x1*x3", "x2^2") == [[1, 0, 1, 0], [1, 0, 0, 1], [0, 2, 0, 0]]
    c = lexntf.classify(4, "x1*x3", [0, 2, 0, 0])
    assert c["verdict"] == "NTF"
    assert c["rule"] == "(iii)"
    assert c["ass"] == [[1, 2], [2, 3, 4]]


def test_decomposition_and_primes():
    assert lexntf.decompose(4, GENS) == [{"bounds": {"1": 1, "2": 2}}, {"bounds": {"2": 2, "3": 1, "4": 1}}]
    assert lexntf.associated_primes(4, GENS) == [[1, 2], [2, 3, 4]]
    assert lexntf.ass_bruteforce(2, ["x1^2", "x1*x2"]) == [[1], [1, 2]]


def test_depth_routes():
    for route in ("auto", "hochster", "colon"):
        assert lexntf.depth(4, GENS, route=route, fast_path=False)["depth"] == 1
    assert lexntf.depth_profile(5, "x1*x4", "x2^2", 3) == [2, 2, 2]


def test_powers_and_witness():
    assert len(lexntf.power(4, GENS, 2)) == 6
    assert lexntf.colon(4, GENS, "x1") == [[0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert "d2-a" in lexntf.witness_cases(4, "x1*x2", "x2*x3")
    w = lexntf.proof_witness(4, "x1*x2", "x2*x3", "d2-a", 2)
    assert w == {"m": [1, 2, 0, 0], "ok": True}
    assert lexntf.ntf_check(4, "x1*x2", "x2*x3", 4)["first_failing_k"] == 2


def test_monomial_round_trip():
    for text in ("x1*x2^3", "1", "x3^2"):
        assert lexntf.format_monomial(lexntf.parse_monomial(text, 3), 3) == text


def test_errors():
    with pytest.raises(lexntf.Error):
        lexntf.lexsegment(3, "x2^2", "x1*x2")
    with pytest.raises(lexntf.Error):
        lexntf.parse_monomial("x7", 3)


def test_survey_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    report = lexntf.survey(3, 2, kmax=4)
    assert report["summary"]["disagreements"] == 0
    jsonschema.validate(report, json.loads(SCHEMA.read_text()))
