import random

import pytest

from qhborel import linalg as la
from qhborel.ainfty import ExtModel, identity_morphism
from qhborel.algebra import Quiver, build_path_algebra
from qhborel.examples import auslander_algebra
from qhborel.linalg import Field
from qhborel.modules import direct_sum, hom_space, isomorphism_status, module_isomorphic, projective, simple_modules
from qhborel.qh import SimpleOrder, standard_modules
from qhborel.twisted import (
    TwistError,
    TwistedModule,
    h0_hom_dim,
    is_maurer_cartan,
    is_triangular,
    mc_defect,
    random_rank2_twist,
    random_twisted_module,
    realize,
    simple_twisted,
    twist_of_extension,
    twmod_apply,
    zero_twisted,
)

from conftest import chain_algebra, corpus


def one(x=1):
    return Field().from_flat(1, 1, [Field()(x)])


def degree_one(M, s, t):
    return [a for a in M.positive() if M.deg[a] == 1 and M.src[a] == s and M.tgt[a] == t]


def full_chain_twist(M, n):
    """L_1 + ... + L_n glued along every degree-one class i -> i+1 with coefficient 1."""
    w = {}
    F = M.field
    dims = [1] * n
    for i in range(n - 1):
        (a,) = degree_one(M, i, i + 1)
        w[a] = F.from_flat(1, 1, [F.one])
    return TwistedModule(M, dims, w)


def test_shape_and_degree_are_checked():
    M = ExtModel(simple_modules(chain_algebra(2))).model
    (a,) = degree_one(M, 0, 1)
    with pytest.raises(TwistError):
        TwistedModule(M, [1, 1], {a: Field().zeros(2, 1)})
    with pytest.raises(TwistError):
        TwistedModule(M, [1, 1], {M.units[0]: one()})
    with pytest.raises(TwistError):
        TwistedModule(M, [1], {})


def test_cyclic_twist_is_not_triangular():
    # 1 -> 2 -> 1 with one composite killed has Ext^1 in both directions
    q = Quiver(2, ((1, 2, "a"), (2, 1, "b")))
    A = build_path_algebra(q, [[(1, q.path_from_names(["b", "a"]))]])
    M = ExtModel(simple_modules(A)).model
    (a,) = degree_one(M, 0, 1)
    (b,) = degree_one(M, 1, 0)
    T = TwistedModule(M, [1, 1], {a: one(), b: one()})
    assert not is_triangular(T)
    with pytest.raises(TwistError):
        mc_defect(T)
    assert is_triangular(TwistedModule(M, [1, 1], {a: one()}))


def test_koszul_gluing_violates_maurer_cartan():
    # m_2 of the two degree-one classes is nonzero, so gluing both fails
    M = ExtModel(simple_modules(chain_algebra(3, [["c2", "c1"]]))).model
    T = full_chain_twist(M, 3)
    assert is_triangular(T)
    assert not is_maurer_cartan(T)
    (a,) = degree_one(M, 0, 1)
    assert is_maurer_cartan(TwistedModule(M, [1, 1, 0], {a: one()}))


def test_long_relation_is_seen_by_m3_only():
    ext = ExtModel(simple_modules(chain_algebra(4, [["c3", "c2", "c1"]])))
    T = full_chain_twist(ext.model, 4)
    defect = mc_defect(T)
    assert defect and all(ext.model.deg[c] == 2 for c in defect)
    M = ext.model
    w = {degree_one(M, i, i + 1)[0]: one() for i in range(2)}
    three = TwistedModule(M, [1, 1, 1, 0], w)
    assert is_maurer_cartan(three)
    # realizes to the uniserial projective of length three
    A = ext.C.algebra
    assert module_isomorphic(realize(three, ext.transfer), projective(A, 0)) is not None


@pytest.mark.parametrize("n", [2, 3])
def test_simples_realize_to_standard_modules(n):
    A = auslander_algebra(n)
    deltas = standard_modules(A, SimpleOrder.natural(n))
    ext = ExtModel(deltas)
    for i, D in enumerate(deltas):
        R = realize(simple_twisted(ext.model, i), ext.transfer)
        assert module_isomorphic(R, D) is not None
    assert realize(zero_twisted(ext.model), ext.transfer).dim == 0


def test_two_source_simples_realize(two_source):
    deltas = standard_modules(two_source.R, two_source.order_R)
    ext = ExtModel(deltas)
    for i, D in enumerate(deltas):
        assert module_isomorphic(realize(simple_twisted(ext.model, i), ext.transfer), D) is not None


@pytest.mark.parametrize("k", range(5))
def test_h0_hom_matches_hom_of_realizations(k):
    name, A, order = corpus()[k]
    ext = ExtModel(standard_modules(A, order))
    M = ext.model
    n = A.n_vertices
    rng = random.Random(100 + k)
    for _ in range(20):
        o1 = sorted((rng.randrange(n) for _ in range(rng.randint(1, 3))), reverse=True)
        o2 = sorted((rng.randrange(n) for _ in range(rng.randint(1, 3))), reverse=True)
        T1 = random_twisted_module(M, rng, o1)
        T2 = random_twisted_module(M, rng, o2)
        R1, R2 = realize(T1, ext.transfer), realize(T2, ext.transfer)
        assert R1.dim == sum(standard_modules(A, order)[o].dim for o in o1)
        assert h0_hom_dim(T1, T2) == len(hom_space(R1, R2))


def test_pushforward_along_identity_is_trivial():
    ext = ExtModel(standard_modules(auslander_algebra(3), SimpleOrder.natural(3)))
    T = random_twisted_module(ext.model, random.Random(5), [2, 1, 0])
    U = twmod_apply(identity_morphism(ext.model), T)
    assert U.dims == T.dims
    assert set(U.w) == set(T.w)
    assert all(la.is_zero(U.w[a] - T.w[a]) for a in T.w)


def test_extension_twist_realizes_to_a_non_split_extension():
    n = 3
    A = auslander_algebra(n)
    deltas = standard_modules(A, SimpleOrder.natural(n))
    ext = ExtModel(deltas)
    M = ext.model
    (a,) = degree_one(M, 0, 1)
    T = twist_of_extension(simple_twisted(M, 1), simple_twisted(M, 0), {a: one()})
    assert is_maurer_cartan(T)
    R = realize(T, ext.transfer)
    assert R.dim == deltas[0].dim + deltas[1].dim
    assert isomorphism_status(R, direct_sum([deltas[0], deltas[1]]))[0] == "not-iso"
    split = realize(twist_of_extension(simple_twisted(M, 1), simple_twisted(M, 0), {}), ext.transfer)
    assert module_isomorphic(split, direct_sum([deltas[0], deltas[1]])) is not None


def test_rank_two_twists_are_non_split(two_source):
    ext = ExtModel(standard_modules(two_source.R, two_source.order_R))
    deltas = ext.modules
    rng = random.Random(9)
    seen = 0
    for _ in range(10):
        T = random_rank2_twist(ext.model, rng)
        if T is None:
            continue
        seen += 1
        assert is_maurer_cartan(T)
        R = realize(T, ext.transfer)
        parts = [deltas[i] for i, d in enumerate(T.dims) if d]
        assert R.dim == sum(P.dim for P in parts)
        assert isomorphism_status(R, direct_sum(parts))[0] == "not-iso"
    assert seen == 10
