from fractions import Fraction

import pytest

import centroidkit as ck


def test_heisenberg_centroid():
    for n in (1, 2, 3):
        assert ck.centroid_dim(ck.heisenberg(n)) == 2 * n + 1


def test_centroid_maps_are_fractions():
    maps = ck.centroid(ck.classical("A", 1))
    assert len(maps) == 1
    assert maps[0] == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_tensor_law():
    t = ck.tensor(ck.classical("A", 1), ck.truncated_poly(3))
    assert t.dim == 9
    assert ck.centroid_dim(t) == 3
    assert ck.derivations_dim(t) == 11


def test_json_round_trip():
    h = ck.heisenberg(2)
    assert ck.LieAlgebra.from_json(h.to_json()) == h
    with pytest.raises(ValueError):
        ck.LieAlgebra.from_json("{ nope")


def test_cocycle_witness():
    ok, witness = ck.validate_cocycle(ck.oscillator(), {(0, 3): [1]})
    assert not ok
    assert witness == ("d", "a", "b")
    ok, witness = ck.validate_cocycle(ck.abelian(2), {(0, 1): [Fraction(1, 2)]})
    assert ok and witness is None


def test_affine_membership():
    sl2 = ck.classical("A", 1)
    r = ck.loop_membership(sl2, True, False, {1: 1})
    assert not r["member"]
    assert (r["witness"]["left"], r["witness"]["right"]) == ("h + 8c", "h + 4c")
    assert ck.loop_membership(sl2, True, True, {0: 2}, lam=2, mu=Fraction(-3))["member"]
    assert ck.window_exclusion(sl2, True, True, 2)["excluded"]


def test_local_and_rootgraded():
    assert ck.local_analysis(ck.heisenberg(1))["verdict"] == "indecomposable"
    rg = ck.rootgraded(ck.sl_n_over(ck.truncated_poly(2), 3))
    assert rg["passed"] and rg["centroid_dim"] == 2


def test_suite():
    assert "easy" in ck.suite_names()
    assert ck.run_suite("easy")["passed"]
