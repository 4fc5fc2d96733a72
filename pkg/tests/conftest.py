import os
import random

import pytest

from dagic import build_ontology

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def diamond():
    # r -> {a, b} -> c (edges stored child -> parent)
    return build_ontology(["r", "a", "b", "c"],
                          [("a", "r"), ("b", "r"), ("c", "a"), ("c", "b")])


@pytest.fixture
def star():
    return build_ontology(["r", "a", "b"], [("a", "r"), ("b", "r")])


def chain(n):
    ids = [f"t{i:02d}" for i in range(n)]
    return build_ontology(ids, [(ids[i], ids[i - 1]) for i in range(1, n)])


def random_dag(rng, max_nodes=12):
    """Single-rooted random DAG: every non-root node gets >=1 parent
    among lower-numbered nodes, plus random extra edges."""
    n = rng.randint(2, max_nodes)
    ids = [f"n{i:02d}" for i in range(n)]
    edges = []
    for i in range(1, n):
        parents = {rng.randrange(i)}
        while rng.random() < 0.4:
            parents.add(rng.randrange(i))
        edges += [(ids[i], ids[p]) for p in parents]
    return build_ontology(ids, edges)


@pytest.fixture
def rng():
    return random.Random(20240701)


@pytest.fixture
def data_dir():
    return DATA_DIR
