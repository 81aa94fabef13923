from __future__ import annotations

from fractions import Fraction

import pytest

from olsonorder.algebras import MVChain
from olsonorder.errors import BackendMismatch, ParseError, WeightsNotSummable
from olsonorder.lattice import compare, olson_join, olson_meet
from olsonorder.observables import from_weights, question
from olsonorder.serialize import (
    algebra_from_json,
    algebra_to_json,
    bound_to_json,
    comparison_to_json,
    observable_from_json,
    observable_to_json,
    resolution_to_json,
)

from conftest import load_fixture

F = Fraction

BACKEND_FIXTURES = [
    "mv_chain_4.json",
    "set_algebra_3.json",
    "table_mo2.json",
    "table_block_cycle.json",
    "tribe_2_4.json",
    "tribe_restricted.json",
    "quotient_3.json",
]


@pytest.mark.parametrize("name", BACKEND_FIXTURES)
def test_backend_json_round_trip(name):
    blob = load_fixture(name)
    algebra = algebra_from_json(blob)
    assert algebra_to_json(algebra) == blob
    again = algebra_from_json(algebra_to_json(algebra))
    assert [again.element_to_json(e) for e in again.elements()] == [
        algebra.element_to_json(e) for e in algebra.elements()
    ]


def test_algebra_from_json_rejects_malformed():
    for blob in (
        None,
        42,
        {},
        {"kind": "unknown"},
        {"kind": "mv_chain"},
        {"kind": "mv_chain", "n": "4"},
        {"kind": "mv_chain", "n": True},
        {"kind": "set_algebra", "omega": -1},
        {"kind": "table", "zero": 0, "one": 1},
        {"kind": "table", "add": [[0]], "zero": 0, "one": 0},
        {"kind": "tribe", "omega": 2},
        {"kind": "quotient", "omega": 2, "null": [0, 1]},
    ):
        with pytest.raises(ParseError):
            algebra_from_json(blob)


def test_observable_round_trip(mv4):
    x = from_weights(
        mv4,
        (F(-1, 2), F(1, 3)),
        (mv4.element(F(1, 4)), mv4.element(F(3, 4))),
    )
    blob = observable_to_json(x)
    assert blob == {"points": ["-1/2", "1/3"], "weights": ["1/4", "3/4"]}
    assert observable_from_json(mv4, blob) == x


def test_observable_from_json_structural_errors(mv4):
    for blob in (
        None,
        [],
        {"points": ["0"]},
        {"points": "0", "weights": ["1"]},
        {"points": ["0", "zero"], "weights": ["1/2", "1/2"]},
    ):
        with pytest.raises(ParseError):
            observable_from_json(mv4, blob)
    # length mismatch survives parsing and fails observable validation
    with pytest.raises(WeightsNotSummable):
        observable_from_json(mv4, {"points": ["0", "1"], "weights": ["1"]})


def test_observable_from_json_backend_mismatch(mv4, set2):
    q = question(set2, set2.subset((0,)))
    blob = observable_to_json(q)
    with pytest.raises(BackendMismatch):
        observable_from_json(mv4, blob)
    # a rational with the wrong granularity is well-formed but foreign
    with pytest.raises(BackendMismatch):
        observable_from_json(mv4, {"points": ["0"], "weights": ["1/3"]})


def test_resolution_serialization(mv4):
    x = question(mv4, mv4.element(F(1, 4)))
    rows = resolution_to_json(x)
    assert rows == [
        {"t": "0", "open": "0", "closed": "3/4"},
        {"t": "1", "open": "3/4", "closed": "1"},
    ]


def test_comparison_serialization(mv4):
    qa = question(mv4, mv4.element(F(1, 4)))
    qb = question(mv4, mv4.element(F(3, 4)))
    same = comparison_to_json(compare(qa, qa))
    assert same == {"verdict": "equal"}
    oneway = comparison_to_json(compare(qa, qb))
    assert oneway["verdict"] == "less_or_equal"
    assert "witness_t" in oneway


def test_bound_serialization(mv4, cycle):
    qa = question(mv4, mv4.element(F(1, 4)))
    qb = question(mv4, mv4.element(F(3, 4)))
    blob = bound_to_json(olson_meet((qa, qb)))
    assert blob["exists"] is True
    assert blob["certified"] == "elementwise"
    assert blob["observable"]["weights"] == ["3/4", "1/4"]

    def elem(name):
        return cycle.element_from_json(cycle.atom_names.index(name))

    missing = bound_to_json(olson_join((question(cycle, elem("c")), question(cycle, elem("g")))))
    assert missing["exists"] is False
    assert missing["certified"] == "exhaustive"
    assert len(missing["frontier"]) >= 2
