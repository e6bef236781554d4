import json
from functools import lru_cache
from pathlib import Path

import pytest

from garsidekit.garside import structure_of
from garsidekit.presentation import Presentation

DATA = Path(__file__).parent / "data"
ROOT = Path(__file__).parent.parent

RELATIONS = {
    "P1": [("aba", "bb")],
    "P2": [("aba", "bab")],
    "P3": [("abb", "ba")],
    "P4": [("ab", "ba")],
    "P5": [("aa", "bb")],
}
GARSIDE = ("P1", "P2", "P4", "P5")


@lru_cache(maxsize=None)
def pres(name: str) -> Presentation:
    return Presentation.from_relations("ab", RELATIONS[name])


@lru_cache(maxsize=None)
def struct(name: str):
    return structure_of(pres(name))


@lru_cache(maxsize=None)
def frozen_oracle() -> dict:
    return json.loads((DATA / "oracle_radius6.json").read_text(encoding="utf-8"))


@pytest.fixture(params=GARSIDE)
def garside_name(request):
    return request.param


@pytest.fixture
def p1():
    return pres("P1")


@pytest.fixture
def p2():
    return pres("P2")


@pytest.fixture
def g1():
    return struct("P1")


@pytest.fixture
def g2():
    return struct("P2")
