import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhborel import ainfty as ai
from qhborel.ainfty import (
    AInftyAlgebra,
    AInftyError,
    AInftyMorphism,
    ExtModel,
    check_morphism,
    check_stasheff,
    compose,
    identity_morphism,
    invert,
    morphisms_equal,
    sgn,
    truncate,
)
from qhborel.modules import ext_dimensions, simple_modules
from qhborel.qh import standard_modules

from conftest import chain_algebra, corpus


def koszul_chain():
    """1 -> 2 -> 3 with the composite killed: Ext of the simples is Koszul."""
    return chain_algebra(3, [["c2", "c1"]])


def a4_long_relation():
    return chain_algebra(4, [["c3", "c2", "c1"]])


def a5_two_relations():
    return chain_algebra(5, [["c3", "c2", "c1"], ["c4", "c3", "c2"]])


def simples_model(A, cap=None):
    return ExtModel(simple_modules(A), cap)


def by_degree(M, d):
    return [k for k in M.positive() if M.deg[k] == d]


def test_bar_sign_is_positive_on_degree_one_inputs():
    # with all inputs in degree 1 the bar and displayed operations agree
    for n in range(1, 7):
        assert ai._bar_sign([1] * n) == 1


def test_koszul_chain_has_product_into_ext2():
    M = simples_model(koszul_chain()).model
    assert len(by_degree(M, 1)) == 2
    (top,) = by_degree(M, 2)
    products = M.ops.get(2, {})
    hits = [t for t, v in products.items() if top in v and all(M.deg[k] == 1 for k in t)]
    assert len(hits) == 1
    assert not any(M.ops.get(3, {}).values())


def test_long_relation_gives_m3():
    # Ext^2(L_1, L_4) is reached by m_3 of the three degree-one classes, not by m_2
    M = simples_model(a4_long_relation()).model
    (top,) = by_degree(M, 2)
    assert not any(top in v for v in M.ops.get(2, {}).values())
    m3 = [t for t, v in M.ops.get(3, {}).items() if top in v]
    assert len(m3) == 1 and all(M.deg[k] == 1 for k in m3[0])
    assert all(c in (M.field.one, -M.field.one) for c in M.ops[3][m3[0]].values())


@pytest.mark.parametrize("k", range(5))
def test_stasheff_on_delta_models(k):
    name, A, order = corpus()[k]
    ext = ExtModel(standard_modules(A, order))
    M = ext.model
    assert not any(check_stasheff(M, up_to=M.cap + 1).values())
    assert not any(check_morphism(ext.i_inf, M.cap).values())


def test_stasheff_on_two_relation_chain():
    ext = simples_model(a5_two_relations(), cap=5)
    M = ext.model
    assert {n for n, t in M.ops.items() if t} == {2, 3}
    assert not any(check_stasheff(M, up_to=6).values())


def test_wrong_sign_convention_is_detected(monkeypatch):
    def other(degs):
        n = len(degs)
        return sgn(sum((n - l) * d for l, d in enumerate(degs, start=1)))

    monkeypatch.setattr(ai, "_bar_sign", other)
    ext = simples_model(a5_two_relations(), cap=4)
    assert any(check_morphism(ext.i_inf, 3).values())


def test_flipped_entry_breaks_stasheff():
    M = simples_model(a5_two_relations(), cap=5).model
    tup, vec = next(iter(M.ops[2].items()))
    ops = {n: dict(t) for n, t in M.ops.items()}
    ops[2][tup] = {k: -c for k, c in vec.items()}
    bad = AInftyAlgebra(M.field, M.n_obj, M.deg, M.tgt, M.src, M.units, ops, M.cap, M.names)
    assert any(check_stasheff(bad, up_to=4).values())


def test_projection_after_inclusion_is_identity():
    ext = simples_model(a5_two_relations(), cap=4)
    M = ext.model
    pi = compose(ext.p_inf, ext.i_inf, cap=4)
    assert morphisms_equal(pi, identity_morphism(M), up_to=4)


def _scaling(M, c):
    """Strict automorphism x -> c[tgt]/c[src] x (conjugation by a diagonal unit)."""
    comps = {1: {(k,): {k: c[M.tgt[k]] / c[M.src[k]]} for k in M.positive()}}
    return AInftyMorphism(M, M, comps, cap=M.cap, name="s")


@given(st.lists(st.integers(1, 9), min_size=5, max_size=5))
def test_scaling_automorphisms_compose_and_invert(vals):
    M = simples_model(a5_two_relations(), cap=4).model
    F = M.field
    c = [F(v) for v in vals]
    f = _scaling(M, c)
    assert not any(check_morphism(f, 4).values())
    g = invert(f)
    assert morphisms_equal(compose(g, f), identity_morphism(M), up_to=4)
    assert morphisms_equal(compose(f, g), identity_morphism(M), up_to=4)


def test_non_telescoping_scaling_is_not_a_morphism():
    M = simples_model(a5_two_relations(), cap=4).model
    F = M.field
    comps = {1: {(k,): {k: F(2 if M.deg[k] == 1 else 1)} for k in M.positive()}}
    f = AInftyMorphism(M, M, comps, cap=M.cap)
    assert any(check_morphism(f, 4).values())


def test_invert_rejects_singular_first_component():
    M = simples_model(koszul_chain()).model
    comps = {1: {(k,): {} for k in M.positive()}}
    with pytest.raises(AInftyError):
        invert(AInftyMorphism(M, M, comps, cap=M.cap))


def test_truncation_keeps_positive_part():
    ex = ExtModel(standard_modules(*corpus()[1][1:]))
    M = ex.model
    T = truncate(M)
    assert any(M.deg[k] <= 0 for k in M.positive())
    assert all(T.deg[k] > 0 for k in T.positive())
    assert len(T.positive()) == sum(1 for k in M.positive() if M.deg[k] > 0)
    assert not any(check_stasheff(T, up_to=T.cap + 1).values())


@given(st.integers(0, 4), st.integers(0, 10**6))
def test_model_dimensions_match_ext(k, seed):
    name, A, order = corpus()[k]
    deltas = standard_modules(A, order)
    M = ExtModel(deltas).model
    rng = random.Random(seed)
    i, j = rng.randrange(len(deltas)), rng.randrange(len(deltas))
    dims = ext_dimensions(deltas[i], deltas[j], 2)
    for d in range(3):
        # Ext^d(Delta_i, Delta_j) has source i and target j
        count = sum(1 for b in range(M.dim) if M.deg[b] == d and M.src[b] == i and M.tgt[b] == j)
        assert dims[d] == count
