import random

from hypothesis import given
from hypothesis import strategies as st

from qhborel.algebra import Quiver, SubalgebraEmbedding, build_path_algebra
from qhborel.examples import auslander_algebra, example_auslander
from qhborel.modules import direct_sum, ext_dimensions, projective, simple_modules
from qhborel.qh import (
    SimpleOrder,
    check_quasi_hereditary,
    check_strong_lemmas,
    composition_factors,
    delta_filtration,
    is_directed,
    standard_modules,
    verify_exact_borel,
)

from conftest import chain_algebra, corpus


def two_cycle():
    """1 -> 2 -> 1 with the composite through 2 killed (dim 5)."""
    q = Quiver(2, ((1, 2, "a"), (2, 1, "b")))
    return build_path_algebra(q, [[(1, q.path_from_names(["b", "a"]))]])


def dual_numbers():
    q = Quiver(1, ((1, 1, "x"),))
    return build_path_algebra(q, [[(1, q.path_from_names(["x", "x"]))]])


def test_auslander_standard_modules():
    for n in (2, 3, 4):
        A = auslander_algebra(n)
        deltas = standard_modules(A, SimpleOrder.natural(n))
        assert [D.dim for D in deltas] == list(range(1, n + 1))
        for i, D in enumerate(deltas):
            assert composition_factors(D) == [1] * (i + 1) + [0] * (n - i - 1)


def test_two_source_standard_modules(two_source):
    deltas = standard_modules(two_source.A, two_source.order)
    assert [D.dim for D in deltas] == [1, 1, 2]


def test_quasi_hereditary_examples():
    A = auslander_algebra(3)
    assert check_quasi_hereditary(A, SimpleOrder.natural(3)).quasi_hereditary
    rev = check_quasi_hereditary(A, SimpleOrder(3, [(2, 1), (1, 0)]))
    assert not rev.quasi_hereditary


def test_two_cycle_depends_on_order():
    # order 1 < 2: Delta_2 = P_2 with End of dimension 2
    # order 2 < 1: P_2 has Delta_2 on top of P_1 = Delta_1
    C = two_cycle()
    bad = check_quasi_hereditary(C, SimpleOrder(2, [(0, 1)]))
    assert not bad.quasi_hereditary
    assert bad.end_dims == [1, 2]
    good = check_quasi_hereditary(C, SimpleOrder(2, [(1, 0)]))
    assert good.quasi_hereditary
    assert good.delta_dims == [2, 1]
    assert good.filtrations == [[0], [1, 0]]


def test_dual_numbers_not_quasi_hereditary():
    rep = check_quasi_hereditary(dual_numbers(), SimpleOrder(1))
    assert not rep.quasi_hereditary
    assert rep.failures == ["End(Delta1) has dimension 2"]


def test_auslander_projectives_filtered_by_tail_of_deltas():
    n = 4
    rep = check_quasi_hereditary(auslander_algebra(n), SimpleOrder.natural(n))
    assert rep.filtrations == [list(range(i, n)) for i in range(n)]


def test_verify_auslander_pairs():
    for n in (2, 3):
        ex = example_auslander(n)
        rep = verify_exact_borel(ex.R, ex.order_R, ex.iota)
        assert rep.is_exact_borel
        assert rep.normal == "true"
        assert rep.regular is True
        assert rep.strong == (n < 3)


def test_verify_two_source_pair(two_source):
    rep = verify_exact_borel(two_source.R, two_source.order_R, two_source.iota)
    assert rep.is_exact_borel and rep.regular is True
    assert not rep.strong
    assert sorted(rep.matching) == [0, 1, 2]


def test_directed_basic_algebra_is_its_own_borel():
    # for a chain with the natural order every standard module is simple
    A = chain_algebra(3)
    emb = SubalgebraEmbedding(A, A, A.field.identity(A.dim))
    rep = verify_exact_borel(A, SimpleOrder.natural(3), emb)
    assert rep.is_exact_borel
    assert rep.matching == [0, 1, 2]
    assert rep.strong


def test_identity_is_not_borel_when_deltas_are_not_simple():
    A = auslander_algebra(2)
    emb = SubalgebraEmbedding(A, A, A.field.identity(A.dim))
    rep = verify_exact_borel(A, SimpleOrder.natural(2), emb)
    assert not rep.simples_to_standards
    assert not is_directed(A)


def test_strong_lemmas():
    ex = example_auslander(2)
    out = check_strong_lemmas(ex.R, ex.iota)
    assert out["strong"] and out["inequality"] and out["equality"]
    assert out["radical_inclusion"]
    ex3 = example_auslander(3)
    out3 = check_strong_lemmas(ex3.R, ex3.iota)
    assert out3["inequality"] and not out3["strong"]


@given(st.integers(0, 4), st.integers(0, 10**6))
def test_delta_filtration_of_projectives(k, seed):
    name, A, order = corpus()[k]
    rng = random.Random(seed)
    deltas = standard_modules(A, order)
    v = rng.randrange(A.n_vertices)
    f = delta_filtration(projective(A, v), deltas, rng)
    assert f is not None
    assert f[0] == v
    assert all(order.leq(v, c) for c in f)
    assert sum(deltas[c].dim for c in f) == projective(A, v).dim


@given(st.integers(0, 4), st.lists(st.integers(0, 3), min_size=1, max_size=3), st.integers(0, 10**6))
def test_delta_filtration_of_sums_is_multiset_union(k, picks, seed):
    name, A, order = corpus()[k]
    rng = random.Random(seed)
    deltas = standard_modules(A, order)
    vs = [p % A.n_vertices for p in picks]
    parts = [delta_filtration(projective(A, v), deltas, rng) for v in vs]
    whole = delta_filtration(direct_sum([projective(A, v) for v in vs]), deltas, rng)
    assert sorted(whole) == sorted(c for p in parts for c in p)


@given(st.integers(0, 4))
def test_corpus_is_quasi_hereditary(k):
    name, A, order = corpus()[k]
    rep = check_quasi_hereditary(A, order)
    assert rep.quasi_hereditary
    assert rep.end_dims == [1] * A.n_vertices


def test_induced_regular_module_has_every_top():
    ex = example_auslander(3)
    out = check_strong_lemmas(ex.R, ex.iota)
    name, topM, topI = out["rows"][-1]
    assert topM == [1, 1, 1]
    assert all(t >= 1 for t in topI)


def test_regular_degrees_match_ext_between_deltas(two_source):
    R, order, iota = two_source.R, two_source.order_R, two_source.iota
    rep = verify_exact_borel(R, order, iota, regular_cap=2)
    deltas = standard_modules(R, order)
    LB = simple_modules(iota.sub)
    for n, (b, a, r) in rep.regular_degrees.items():
        ext_A = sum(ext_dimensions(D, E, n)[n] for D in deltas for E in deltas)
        ext_B = sum(ext_dimensions(L, M, n)[n] for L in LB for M in LB)
        assert (b, a) == (ext_B, ext_A)
        assert r == a == b
