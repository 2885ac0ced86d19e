"""Smoke tests for the Python bindings."""

import os
import pathlib

import pytest

import toricpsi as tp

FIXTURES = pathlib.Path(os.environ["TORIC_FIXTURES"])


def diamond():
    return tp.Quiver(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


def test_quiver_roundtrip_through_json():
    q = tp.parse_quiver((FIXTURES / "diamond.json").read_text())
    assert q == diamond()
    assert tp.parse_quiver(tp.serialize_quiver(q)) == q
    assert q.n == 4
    assert q.arcs == [(1, 2), (1, 3), (2, 4), (3, 4)]


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        tp.Quiver(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        tp.parse_quiver("not json")
    assert issubclass(tp.InputError, ValueError)


def test_flips_and_flip_class():
    q = diamond()
    assert tp.sources(q) == [1]
    assert tp.sinks(q) == [4]
    flipped = tp.flip(q, 4)
    assert tp.flip(flipped, 4) == q
    members = tp.flip_class(q)
    assert len(members) == 6
    assert q in members
    assert tp.same_toric_poset(q, flipped)


def test_toric_extensions_and_counts():
    words = tp.toric_extensions(diamond())
    assert words == [[1, 2, 3, 4], [1, 3, 2, 4], [1, 4, 2, 3], [1, 4, 3, 2]]
    for method in ("brute", "partition", "recursive"):
        assert tp.count_toric_extensions(diamond(), method) == 4
    assert tp.linear_extensions(diamond()) == [[1, 2, 3, 4], [1, 3, 2, 4]]


def test_hasse_and_closure_are_idempotent():
    q = diamond()
    assert tp.toric_hasse(q) == q
    closure = tp.toric_transitive_closure(q)
    assert tp.toric_transitive_closure(closure) == closure


def test_rational_functions():
    psi = tp.psi_tor(diamond())
    assert str(psi) == "-2 / ((x1-x2)(x1-x3)(x2-x4)(x3-x4))"
    assert not psi.is_zero
    assert psi.denominator == [(1, 2), (1, 3), (2, 4), (3, 4)]
    assert psi.numerator_terms == [("-2", [0, 0, 0, 0])]

    chain = tp.Quiver(3, [(1, 2), (2, 3)])
    assert str(tp.psi_poset(chain)) == "1 / ((x1-x2)(x2-x3))"

    two_pane = tp.parse_quiver((FIXTURES / "disconnected_poset.json").read_text())
    assert tp.psi_tor(two_pane).is_zero


def test_psi_equality_is_semantic():
    assert tp.psi_tor(diamond()) == tp.psi_tor(tp.flip(diamond(), 1))


def test_suite_driver():
    assert "counting" in tp.suite_names()
    ok, text = tp.run_suite("counting")
    assert ok
    assert "PASS" in text
