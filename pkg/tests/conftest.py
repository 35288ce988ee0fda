import random

import pytest
from hypothesis import HealthCheck, settings

from qhborel.algebra import Quiver, build_path_algebra
from qhborel.examples import (
    auslander_algebra,
    example_auslander,
    example_counterexample,
    example_two_source,
    full_dag_algebra,
)
from qhborel.linalg import Field
from qhborel.qh import SimpleOrder

settings.register_profile("qha", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qha")


def chain_algebra(n, zero_relations=()):
    """Linear quiver 1 -> 2 -> ... -> n with monomial relations given as arrow-name lists."""
    q = Quiver(n, tuple((i, i + 1, f"c{i}") for i in range(1, n)))
    rels = [[(1, q.path_from_names(r))] for r in zero_relations]
    return build_path_algebra(q, rels)


@pytest.fixture(scope="session")
def two_source():
    return example_two_source()


@pytest.fixture(scope="session")
def auslander3():
    return example_auslander(3)


@pytest.fixture(scope="session")
def auslander3_action():
    return example_auslander(3, N=3)


@pytest.fixture(scope="session")
def counterexample():
    return example_counterexample()


def corpus():
    """(name, algebra, order) triples used by the property suites."""
    return [
        ("auslander2", auslander_algebra(2), SimpleOrder.natural(2)),
        ("auslander3", auslander_algebra(3), SimpleOrder.natural(3)),
        ("dag3", full_dag_algebra(3), SimpleOrder.natural(3)),
        ("chain4", chain_algebra(4, [["c3", "c2"]]), SimpleOrder.natural(4)),
        ("two_source", example_two_source().A, SimpleOrder.natural(3)),
    ]


def random_unit(A, rng, lo=-3, hi=3):
    while True:
        u = [A.field.random_scalar(rng, lo, hi) for _ in range(A.dim)]
        if A.is_invertible(u):
            return u


@pytest.fixture
def rng():
    return random.Random(12345)


__all__ = ["chain_algebra", "corpus", "random_unit", "Field"]
