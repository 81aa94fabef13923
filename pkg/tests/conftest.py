from __future__ import annotations

import json
import os

import pytest

from olsonorder.algebras import (
    FiniteSetAlgebra,
    FiniteTribe,
    MVChain,
    QuotientBooleanAlgebra,
    block_cycle_algebra,
    mo2_algebra,
    restricted_sum_tribe,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def load_fixture(name: str):
    with open(fixture_path(name), "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def mv4():
    return MVChain(4)


@pytest.fixture(scope="session")
def mv8():
    return MVChain(8)


@pytest.fixture(scope="session")
def set2():
    return FiniteSetAlgebra(2)


@pytest.fixture(scope="session")
def set3():
    return FiniteSetAlgebra(3)


@pytest.fixture(scope="session")
def mo2():
    return mo2_algebra()


@pytest.fixture(scope="session")
def cycle():
    return block_cycle_algebra()


@pytest.fixture(scope="session")
def tribe24():
    return FiniteTribe(2, 4)


@pytest.fixture(scope="session")
def restricted():
    return restricted_sum_tribe()


@pytest.fixture(scope="session")
def quotient3():
    return QuotientBooleanAlgebra(3, (2,))
