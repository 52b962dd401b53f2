import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperset.flat import parse_flat_system, solve
from hyperset.store import Store, empty, set_of


@pytest.fixture
def store():
    return Store()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def fig1(store):
    """The sets of Figure 1: a = {b, 0}, b = {a, 1}, c = {c, 0, 1}."""
    ab = solve(parse_flat_system("x = { y, #0 }\ny = { x, #1 }", store), store)
    c = solve(parse_flat_system("x = { x, #0, #1 }", store), store)["x"]
    zero = empty(store)
    one = set_of(zero, store=store)
    return {"a": ab["x"], "b": ab["y"], "c": c, "0": zero, "1": one}
