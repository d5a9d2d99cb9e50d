import os
import pathlib

import pytest

import infalg

FIXTURES = pathlib.Path(os.environ.get("INFALG_FIXTURES", pathlib.Path(__file__).parents[2] / "fixtures"))


def test_fixture_names():
    assert infalg.fixture_names() == [
        "multivariate", "string", "lattice_valued", "chain_carrier", "noncommutative", "footnote",
    ]


def test_multivariate_tables():
    a = infalg.load({"kind": "multivariate", "frames": [2, 2]})
    assert len(a) == 16
    assert a.domain_names == ["{}", "{1}", "{2}", "{1,2}"]
    x = a.index("{00}")
    assert a.extract("{1}", x) == a.index("{00,01}")
    assert a.combine(a.unit, x) == x
    assert a.leq(a.unit, a.null)
    assert sorted(a.names[i] for i in infalg.atoms(a)) == ["{00}", "{01}", "{10}", "{11}"]
    assert infalg.atom_class(a) == "completely_atomistic"


def test_verify_and_tamper():
    assert infalg.verify(infalg.load(FIXTURES / "multivariate.json"))["passed"]
    report = infalg.verify(infalg.load(FIXTURES / "multivariate_tampered.json"))
    assert not report["passed"]
    assert any(c["passed"] is False for c in report["checks"])


def test_json_round_trip():
    a = infalg.fixture("footnote")
    b = infalg.load(a.to_json())
    assert a.digest() == b.digest()


def test_embedding_through_atoms():
    e = infalg.embed(infalg.fixture("multivariate"), "atoms")
    assert e["embedding"] is True
    assert len(e["universe"]) == 4


def test_independence():
    a = infalg.fixture("multivariate")
    assert infalg.independent(a, "{1}", "{2}", "{}")
    assert not infalg.independent(a, "{1}", "{1}", "{2}")


def test_separoids():
    assert infalg.separoid("powerset:3")["passed"]
    n5 = infalg.separoid("N5")
    assert not n5["passed"]
    c5 = next(c for c in n5["checks"] if c["name"] == "C5")
    assert c5["witness"] == [2, 3, 0, 1]


def test_errors():
    with pytest.raises(ValueError):
        infalg.load('{"kind": "torus"}')
    with pytest.raises(ValueError):
        infalg.load(FIXTURES / "malformed.json")
    with pytest.raises(OverflowError):
        infalg.load({"kind": "string", "alphabet_size": 2, "max_len": 6})
    assert len(infalg.load({"kind": "string", "alphabet_size": 2, "max_len": 6}, max_carrier=128)) == 128


def test_random_instances_verify():
    for seed in range(20):
        assert infalg.verify(infalg.random_instance(seed))["passed"]
