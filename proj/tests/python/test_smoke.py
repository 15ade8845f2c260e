import pytest

import diagonal


def test_families():
    assert "2666" in diagonal.families()
    assert "24612" in diagonal.families()


def test_generate_and_verify():
    rec = diagonal.generate("2666", 1, 1, 2)
    assert rec["equation"]["exponents"] == [2, 6, 6, 6]
    assert diagonal.verify(rec)
    rec["x"][0] = 12345
    assert not diagonal.verify(rec)


def test_invalid_input():
    with pytest.raises(diagonal.InvalidInput):
        diagonal.generate("4444", 1, 1, 2)
    with pytest.raises(diagonal.Error):
        diagonal.verify("{}")


def test_lattice():
    assert diagonal.pairing([1, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]) == -2
    assert diagonal.genus_and_degree([0, 0, 0, 0, 1, 0]) == (0, 2)
    assert diagonal.five_squares([1, 0, 0, 0, 0, 0]) == 9


def test_cone():
    assert diagonal.extremal_rays([[1, 0], [0, 1]]) == [["0", "1"], ["1", "0"]]
    with pytest.raises(diagonal.Degenerate):
        diagonal.extremal_rays([[1, 0]])


def test_searches():
    assert diagonal.sextic_search(200) == [(28, 44, 57, 162967)]
    assert (8261, 5, 18, 7) in diagonal.surface_search([1, 1, 2, 2], 20)
    assert diagonal.selmer_check(20) == []
    assert not diagonal.mod3_obstruction([1, 1, 2, 2])


def test_forms():
    p, q, r = diagonal.unirational_map("2", "3", "1/2", "2")
    assert p and q and r
    x, y = diagonal.point_q("1", "2", "3")
    assert "/" in x or x.lstrip("-").isdigit()
