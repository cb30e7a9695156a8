from fractions import Fraction
from pathlib import Path

import pytest

import admlab

DATA = Path(__file__).resolve().parents[2] / "data"


def test_dumbbell_invariants():
    g = admlab.Graph.load(str(DATA / "dumbbell.graph"))
    assert g.genus == 2
    assert admlab.epsilon(g) == 1
    assert admlab.phi(g) == 1
    assert admlab.delta(g) == [0, 1]
    assert g.canonical_divisor() == {"u": 1, "w": 1}


def test_circle_values_are_fractions():
    g = admlab.Graph.parse("vertex v genus=1\nedge c v v length=1\n")
    eps = admlab.epsilon(g)
    assert isinstance(eps, Fraction) and eps == Fraction(1, 6)
    assert admlab.epsilon_via_resistance(g) == eps
    assert admlab.phi(g) == Fraction(1, 12)
    assert admlab.resistance(g, "vertex:v", "edge:c@1/4") == Fraction(3, 16)
    assert admlab.green(g, "vertex:v", "vertex:v") == Fraction(1, 48)
    (approx,) = admlab.oracle(g, "vertex:v", 128)
    assert approx == pytest.approx(1 / 48, abs=1e-5)


def test_theta_measure():
    mu = admlab.canonical_measure(admlab.Graph.load(str(DATA / "theta.graph")))
    assert set(mu["edges"].values()) == {Fraction(1, 3)}
    assert sum(mu["vertices"].values()) + sum(mu["edges"].values()) == 1


def test_check_report_passes():
    g = admlab.random_graph(3)
    report = admlab.check(g)
    assert all(c["passed"] for c in report["checks"])
    assert 2 <= report["genus"] <= 6


def test_sweep_is_deterministic():
    assert admlab.sweep(5, 6) == admlab.sweep(5, 6)


def test_ledger():
    report = admlab.load_ledger(str(DATA / "circle.ledger"))
    assert report["omega_sq"] == "65/6"
    assert admlab.faltings_constant(2) == Fraction(1, 25)
    assert admlab.isotriviality_floor(2) == Fraction(1, 43046721)


def test_identities():
    names = admlab.identity_names()
    assert len(names) == 6
    for name in names:
        assert admlab.verify_identity(name)["holds"]
    assert admlab.poly("16g(g-1)^3") == "16g^4 - 48g^3 + 48g^2 - 16g"
    assert admlab.poly_eval("12g-4", 3) == 32


def test_errors():
    with pytest.raises(ValueError):
        admlab.Graph.parse("edge e a b length=1\n")
    with pytest.raises(ValueError):
        admlab.verify_identity("nope")
    with pytest.raises(ValueError):
        admlab.poly("g +")
