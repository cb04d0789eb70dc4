import math
from fractions import Fraction

import pytest

import sspairs

QUADRIC = {
    "v": {"N": 1, "shape": "Trivial", "terms": [{"weight": [0, 0], "coeff": "1"}]},
    "w": {"N": 1, "shape": "Sym(2)", "terms": [{"weight": [1, 1], "coeff": "1"}]},
}


def from_roots(lead, roots):
    c = [Fraction(lead)]
    for r in roots:
        nxt = [Fraction(0)] * (len(c) + 1)
        for i, x in enumerate(c):
            nxt[i + 1] += x
            nxt[i] -= r * x
        c = nxt
    return c


def test_resultant_matches_product_formula():
    f = from_roots(2, [1, -3])
    g = from_roots(Fraction(1, 2), [Fraction(1, 2), 4, 0])
    expect = Fraction(1, 2) ** 2
    for beta in [Fraction(1, 2), 4, 0]:
        expect *= sum(c * Fraction(beta) ** i for i, c in enumerate(f))
    assert Fraction(sspairs.resultant(f, g)) == expect
    assert abs(Fraction(sspairs.koszul_resultant(f, from_roots(1, [5, 6]), 3))) == abs(
        Fraction(sspairs.resultant(f, from_roots(1, [5, 6])))
    )


def test_discriminant_convention():
    a0, a1, a2 = 3, -5, 2
    assert Fraction(sspairs.discriminant([a0, a1, a2])) == -a2 * (a1 * a1 - 4 * a0 * a2)


def test_sl2_criterion():
    assert not sspairs.sl2_pair_nss([1], [0, 0, 1])
    assert sspairs.sl2_pair_nss([1], [0, 1, 1, 0])


def test_polytopes_and_degrees():
    assert sspairs.chow_polytope_vertices(2) == [[1, 2, 1], [2, 0, 2]]
    assert sspairs.scaled_containment(4)
    for d in range(2, 9):
        m = 3
        h0 = [d * m + 1, 2 * (d * m - d + 1), d * m - 2 * d + 1]
        assert sspairs.weighted_euler_degree(h0) == 2 * d


def test_pair_check_and_futaki():
    v = sspairs.pair_check(QUADRIC)
    assert v["status"] == "proven_semistable"
    assert sspairs.futaki_gen(QUADRIC, [1, -1]) == 0
    bad = dict(QUADRIC, w={"N": 1, "shape": "Sym(2)", "terms": [{"weight": [2, 0], "coeff": "1"}]})
    v = sspairs.pair_check(bad)
    assert v["status"] == "unstable"
    assert "witness" in v


def test_energy_profile_slope():
    bad = dict(QUADRIC, w={"N": 1, "shape": "Sym(2)", "terms": [{"weight": [0, 2], "coeff": "1"}]})
    prof = sspairs.energy_profile(bad, [1, -1], tmin=1e-6, points=25)
    s = prof["samples"]
    slope = (s[-1]["nu"] - s[-2]["nu"]) / (s[-1]["log_t2"] - s[-2]["log_t2"])
    assert math.isclose(slope, sspairs.futaki_gen(bad, [1, -1]), abs_tol=1e-6)


def test_toric_and_torsion():
    ok, witness = sspairs.toric_extend([[0, 0], [1, 0], [0, 1], [1, 1]], [[1, 0], [0, 1]])
    assert not ok
    assert witness is not None
    assert Fraction(sspairs.torsion({"dims": [2, 2], "maps": [[[2, 1], [1, 1]]]})) == 1
    with pytest.raises(ValueError):
        sspairs.torsion({"dims": [2, 2], "maps": [[[1, 2], [2, 4]]]})


def test_characteristic_and_examples():
    assert "sl3-xnil" in sspairs.example_names()
    x = sspairs.example("sl3-xnil", samples=10)
    assert x["characteristic"]["chi_min"] == ["2", "2", "0"]
    assert x["characteristic"]["h"] == ["1/2", "1/2", "-1"]
    assert x["degeneration_weight"] == -2
    c = sspairs.characteristic({"N": 2, "shape": "Sym(2)", "terms": [{"weight": [2, 0, 0], "coeff": "1"}]})
    assert c["h"] == ["1", "-1/2", "-1/2"]


def test_bad_input_raises():
    with pytest.raises(ValueError):
        sspairs.pair_check({"v": {"N": 1}})
