import pytest

import lieon

HEISENBERG = {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": [["3", "1"]]}]}
DYON = {"dim": 2, "brackets": [{"i": 1, "j": 2, "out": [["2", "1"]]}]}
T1 = {"dim": 4, "brackets": [{"i": 3, "j": 4, "out": [["1", "1"]]}]}
T2 = {"dim": 4, "brackets": [{"i": 1, "j": 2, "out": [["3", "1"]]}]}


def test_check_and_classify():
    assert lieon.is_lie(HEISENBERG)
    assert lieon.classify(HEISENBERG)["class"] == "triadon"
    assert lieon.classify(DYON)["class"] == "dyon"
    bad = {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": [["1", "1"]]}, {"i": 1, "j": 3, "out": [["3", "1"]]}]}
    assert not lieon.is_lie(bad)
    with pytest.raises(lieon.NotLieError):
        lieon.compatible(bad, bad)


def test_compatibility():
    assert lieon.compatible(HEISENBERG, HEISENBERG)
    assert not lieon.compatible(T1, T2)
    assert lieon.schouten(T1, T2) != "0"


def test_modular():
    assert lieon.modular_vector(DYON) == ["-1", "0"]
    split = lieon.modular_disassemble(DYON)
    assert split["theta"] == ["-1", "0"]
    assert lieon.lie_rank(DYON) == 2


def test_schemes():
    scheme = lieon.disassemble_solvable(HEISENBERG)
    assert lieon.verify_scheme(scheme)["complete"]
    so4 = lieon.classical("so", 4)
    assert lieon.census(so4) == {"dyons": 0, "triadons": 12, "abelian": 0, "steps": 2}
    assert lieon.build_algebra("gl", 2)["dim"] == 4


def test_errors():
    with pytest.raises(ValueError):
        lieon.is_lie("{not json")
    with pytest.raises(ValueError):
        lieon.classical("so", 3, ["1", "0", "1"])
