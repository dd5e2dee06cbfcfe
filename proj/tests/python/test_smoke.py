import pathlib

import pytest

import veer

FIXTURE = pathlib.Path(__file__).resolve().parents[2] / "data" / "sigma05.tt"


def test_rl_report():
    r = veer.run_word("RL")
    assert r["schema"] == veer.SCHEMA
    assert r["tetrahedra"] == 2
    assert r["cusps"] == 1
    assert r["field"]["minpoly"] == "1 -3 1"
    assert abs(float(r["field"]["lambda"]["decimal"]) - (3 + 5 ** 0.5) / 2) < 1e-9
    assert r["veering"]["veering"]
    assert "timing" not in r


def test_rotation_conjugate():
    assert veer.conjugate(veer.run_word("RRLRL"), veer.run_word("LRLRR"))
    assert not veer.conjugate(veer.run_word("RL"), veer.run_word("RRL"))


def test_reports_deterministic():
    assert veer.run_word("RRL") == veer.run_word("RRL")


def test_errors():
    with pytest.raises(veer.VeerError):
        veer.run_word("RRR")
    with pytest.raises(veer.ParseError):
        veer.validate_track("switch zero\n")
    assert issubclass(veer.ParseError, ValueError)


def test_seed_round_trip():
    text = veer.seed_torus("RRL")
    assert veer.validate_track(text)["genus"] == 1
    assert veer.run_track(text)["field"]["minpoly"] == "1 -4 1"


def test_triangulation_key():
    r = veer.run_word("RL", triangulation=True)
    assert veer.conjugacy_key(r["triangulation"]) == r["conjugacy"]["key"]


def test_tetrahedra_bound():
    assert veer.tetrahedra_bound() == 9863382150


@pytest.mark.skipif(not FIXTURE.exists(), reason="fixture not present")
def test_sigma05():
    r = veer.run_track(FIXTURE.read_text())
    assert r["field"]["minpoly"] == "1 -2 0 -2 1"
    assert r["tetrahedra"] == 6
    assert r["cusps"] == 3
    assert r["period"]["m"] == 6
