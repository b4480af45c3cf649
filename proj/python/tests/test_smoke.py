from fractions import Fraction

import pytest

import hilbcone


def test_plane_severi_class():
    r = hilbcone.severi_class("p2", "7H", 12)
    assert r["class_expr"] == "18H-5/2B"
    assert r["class"]["b"] == "-5/2"
    assert r["flags"] == []
    assert hilbcone.ramification_report("p2", "7H", 12) == (18, 5)


def test_incomplete_system_flag():
    r = hilbcone.severi_class("p2", "9H", 18, codim=1)
    assert r["class_expr"] == "24H-5/2B"
    assert "EQ_SEV_PLUS_ONE" in r["flags"]


def test_hirzebruch_and_subcollection():
    assert hilbcone.severi_class("fr:1", "7E+7F", 12)["class_expr"] == "19E+18F-5/2B"
    assert hilbcone.severi_class("p2", "7H", 12, subcollection=13)["class_expr"] == "216H-55/2B"


def test_slopes_and_pairings():
    assert hilbcone.slope_decompose("p2", "25H-7/2B", "7H-B", "H", 12) == Fraction(1, 7)
    assert hilbcone.slope_decompose("p2", "18H-5/2B", "7H-B", "H", 12) == Fraction(1, 5)
    assert hilbcone.pair_curve([4], 28, "p2", "7H-B", 12) == 0
    assert hilbcone.pair_curve([4], 28, "p2", "18H-5/2B", 12) == 2


def test_enumerators():
    sols = hilbcone.enumerate_hirzebruch(1, 12, ["chi"])["candidates"]
    pairs = {(c["a"], c["b"]) for c in sols}
    assert {(7, 7), (2, 12), (0, 35)} <= pairs
    assert hilbcone.enumerate_k3(6, 100)["solutions"] == []
    assert [s["d"] for s in hilbcone.enumerate_p2(12)["solutions"]] == [7]
    assert hilbcone.imposing_wall(16) == (9, "9H-1/2B")
    with pytest.raises(ValueError):
        hilbcone.imposing_wall(7)


def test_cones_and_walls():
    assert hilbcone.cone_contains([[0, 1], [7, -1]], [25, "-7/2"])
    assert not hilbcone.cone_contains([[1, 0], [0, 1]], [-1, 0])
    restricted = hilbcone.restrict_walls("f1n3.json", "H,B")
    p2 = hilbcone.load_fixture("p2n3.json")
    assert sorted(map(tuple, (w["functional"] for w in restricted["walls"]))) == sorted(
        map(tuple, (w["functional"] for w in p2["walls"]))
    )
    assert [w["label"] for w in restricted["dropped"]] == ["C_E[3]-dual"]
    assert hilbcone.transport_up(3, [1, 3, 0]) == [1, 4, 0]


def test_plot_and_reproduce():
    svg = hilbcone.plot("f1n3.json")
    assert svg.startswith("<?xml") and ">X_{2,0}<" in svg
    report = hilbcone.reproduce()
    assert report["failed"] == 0
    assert sorted(r["id"] for r in report["records"] if r["status"] == "WARN") == [
        "EQ_SEV_PLUS_ONE",
        "FR12_LIST_MISMATCH",
        "K3_SOLUTION_SET_MISMATCH",
    ]
