import os
import pathlib

import pytest

import scarrays

DATA = pathlib.Path(os.environ.get("SCA_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_load_and_check():
    p = scarrays.load(str(DATA / "r35.txt"))
    assert p.satisfies_cprime()
    assert p.max_piece() == 1
    report = scarrays.check(p)
    assert report["verdict"] == "pass"
    assert report["summary"]["max_piece"] == 1


def test_word_problem():
    p = scarrays.load(str(DATA / "q34.txt"))
    r = "aabaBacaCadaDaeaEbbcbCbdbDbebEccdE"
    assert p.is_identity(r)
    assert p.is_identity("ab" + r + "BA")
    assert not p.is_identity("ab")
    assert p.reduce("aA") == ""


def test_staircase_fails():
    p = scarrays.fixtures.p8()
    assert p.max_piece() == 12
    assert not p.satisfies_cprime()


def test_ball_and_verify():
    assert scarrays.ball_size(scarrays.fixtures.free_group(2), 2)[0] == 17
    rep = scarrays.verify(scarrays.load(str(DATA / "q34.txt")), "phi", samples=4, seed=3)
    assert rep["verdict"] == "pass"
    assert rep["schema"] == 1


def test_embed():
    assert scarrays.minimal_exponent("15/512") == 2078
    r = scarrays.embed(scarrays.load(str(DATA / "chain9.txt")), N=8, cap=1000)
    assert r["M"] == 2078
    assert r["passed"]


def test_errors():
    with pytest.raises(scarrays.Error):
        scarrays.Presentation("gens: a\nab(c\n")
