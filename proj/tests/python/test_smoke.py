"""Smoke tests for the msv python module."""

import json

import pytest

import msv


def test_worked_example_3412():
    r = msv.analyze("3412")
    assert r.complexity == 2
    assert r.card_opposite_rothe == 2
    assert r.card_dominant == 1
    assert r.card_southwest == 9
    assert r.card_l == 8
    assert r.card_l_prime == 7
    assert r.vertex_count == 6
    assert r.component_count == 1
    assert r.dim_msv == 14
    assert r.dim_y == 7


def test_permutation_api():
    w = msv.Permutation("3,4,1,2")
    assert w == msv.Permutation([3, 4, 1, 2])
    assert str(w) == "3412"
    assert w(1) == 3
    assert len(w) == 4
    assert w.inverse() == w
    assert (w * w.inverse()).is_identity()
    assert msv.Permutation.longest_element(4).word == [4, 3, 2, 1]
    with pytest.raises(ValueError):
        msv.Permutation([2, 2, 1])


def test_diagrams():
    assert msv.opposite_rothe("3412") == [(2, 3), (4, 1)]
    assert msv.essential_set("34512") == [(2, 4), (4, 1), (5, 2)]
    assert msv.dominant_piece("54132") == []
    b = msv.bundle("3412")
    assert len(b["southwest"]) == 9
    assert len(b["l_prime"]) == 7
    comps = msv.connected_components(msv.opposite_rothe("34512"), 5)
    assert comps == [[(4, 1), (5, 1), (5, 2)], [(2, 4)]]
    assert msv.is_french_young(comps[0], 5)


def test_graph_and_cone():
    g = msv.graph("3412")
    assert g["rows"] == [2, 3, 4]
    assert g["cols"] == [1, 2, 3]
    assert len(g["edges"]) == 8
    assert g["components"] == 1
    assert msv.cone_dim_by_rank("3412") == 5
    assert msv.cone_dim_by_formula("3412") == 5


def test_report_dict_round_trip():
    d = msv.analyze("54132").to_dict()
    parsed = json.loads(json.dumps(d))
    assert parsed["complexity"] == 4
    assert parsed["card_l"] == 12


def test_constructions():
    w, predicted = msv.w0_si(5, 4)
    assert str(w) == "54312"
    assert predicted == 8
    assert str(msv.witness(5, 8)) == "54312"
    assert str(msv.witness(5, 4)) == "54132"
    composed = msv.compose_antidiagonal("54312", "123", 2)
    assert str(composed) == "34512"
    assert msv.analyze(composed).complexity == 5
    with pytest.raises(ValueError):
        msv.witness(6, 1)
    with pytest.raises(ValueError):
        msv.witness(6, 1000)


def test_spectrum_and_verify():
    s = msv.spectrum(4)
    assert s.achieved == [0, 2, 3]
    assert s.max_complexity == 3
    assert [str(m) for m in s.maximizers] == ["4312"]
    assert str(s.witnesses[3]) == "4312"
    assert s.total_enumerated == 24

    assert msv.verify("max", 5).passed
    assert msv.verify("no-one", 4).passed
    outcome = msv.verify("unique", 5)
    assert outcome.passed and "54312" in outcome.note


def test_sampling_is_deterministic():
    a = [r.complexity for r in msv.sample_reports(12, 25, seed=42)]
    b = [r.complexity for r in msv.sample_reports(12, 25, seed=42)]
    assert a == b
    assert all(0 <= d <= 99 and d != 1 for d in a)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "spectrum_n4.json"
    s = msv.spectrum(4)
    msv.save_cache(s, path)
    loaded = msv.load_cache(4, path)
    assert loaded.achieved == s.achieved
    raw = json.loads(path.read_text())
    assert raw["schema"] == 1
    raw["witnesses"]["2"] = "1234"
    path.write_text(json.dumps(raw))
    with pytest.raises(msv.VerificationError):
        msv.load_cache(4, path)


def test_minors():
    conditions = msv.rank_conditions("3412")
    assert [(rc.cell, rc.bound) for rc in conditions] == [((2, 3), 2), ((4, 1), 0)]
    minors = msv.minor_generators("3412", for_y=True)
    assert len(minors) == 1
    assert str(minors[0]) == "det z[{2,3,4},{1,2,3}] with z(4,1)=0"
    with pytest.raises(msv.LimitError):
        msv.minor_generators("3412", cap=1)


def test_render():
    text = msv.render("34512", layers=["dots", "lasers", "opposite_rothe"])
    assert "●" in text
    assert text.count("###") == 4
    tikz = msv.render("3412", target="tikz", layers=["dots"])
    assert tikz.startswith("\\documentclass[tikz]{standalone}")
