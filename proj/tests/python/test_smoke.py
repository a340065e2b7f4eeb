import pytest

import tarski


def pm(text, n=2):
    return tarski.PrefixMap(n, text)


def test_prefix_map_arithmetic():
    assert pm("{1->21, 2->22}") == pm("{e->2}")
    assert pm("{2->1}") * pm("{1->2}") == pm("{1->1}")
    assert not (pm("{1->2}") * pm("{1->2}"))
    assert str(pm("{2->1,1->2}")) == "{1->2, 2->1}"
    assert tarski.sigma(pm("{11->11,12->2,2->12}")) == pm("[12,2]")
    fixed, moving = tarski.cooper_decompose(pm("{11->11,12->2,2->12}"))
    assert fixed == pm("[11]")
    assert moving == pm("{12->2,2->12}")
    assert tarski.domain_idempotent(pm("{11->2}")) == pm("[11]")


def test_errors_carry_their_kind():
    with pytest.raises(tarski.TarskiError) as info:
        pm("{1->1, 1->2}")
    assert info.value.args[1] == "ParseError"
    with pytest.raises(ValueError):
        tarski.clopen_iso(pm("[1]", 3), pm("[1,2]", 3))


def test_witnesses():
    w = tarski.f3_witness(pm("[e]"))
    assert w["unit"] == pm("{11->2, 12->11, 2->12}")
    assert w["cycle"] == "(132)"
    t = tarski.f1_witness(pm("[1]"), tarski.EPPoint(2, "1|1"))
    assert t == pm("{11->12,12->11,2->2}")
    assert tarski.is_involution(t)
    parts = tarski.piecewise_factorize(pm("{1->11}"))
    assert parts == [(pm("{1->11,21->12,22->2}"), pm("[1]"))]
    r = tarski.principality_decompose(pm("{1->11}"))
    assert r["pair"] == ("1", "11")
    assert str(r["fixed_point"]) == "e|1"
    q = tarski.apply_point(pm("{1->2}"), tarski.EPPoint(2, "1|1"))
    assert str(q) == "2|1"


def test_finite_instances():
    i3 = tarski.FiniteMonoid("I3")
    assert len(i3) == 34
    assert i3.units_order() == 6
    assert i3.multiply("{1->2}", "{2->3}") == "{}"
    assert i3.multiply("{2->3}", "{1->2}") == "{1->3}"
    assert i3.classify() == 3
    assert tarski.FiniteMonoid("prod:I2xI2").classify() is None


def test_reports():
    report = tarski.analyze("I3")
    assert report["flags"]["is_fundamental"] is True
    assert report["classification"]["n"] == 3
    assert tarski.analyze("cn:2", samples=20)["flags"]["is_zero_simple"] is True
    assert tarski.roundtrip("I2")["checks"]["bijective"] is True
    suite = tarski.run_suite("axioms", "I2")
    assert all(inv["failures"] == 0 for inv in suite["invariants"])


def test_cli_entry():
    code, out, _ = tarski.cli(["witness", "f3", "--cn", "2", "--e", "[1]"])
    assert code == 0
    assert "g^3 = 1" in out
    assert tarski.cli(["test", "nonsense"])[0] == 2
