import random

import pytest

from qhborel.ainfty import AInftyError, ExtModel, truncate
from qhborel.algebra import Quiver, SubalgebraEmbedding, build_path_algebra, semisimple
from qhborel.borel import (
    SynthesisError,
    check_diagram_commutes,
    conjugate_subalgebras,
    keller_module,
    reconstruct,
    synthesize_borel_pair,
    twisted_from_module,
    verify_conjugation,
)
from qhborel.examples import auslander_algebra, fenwick_projectives, la_add
from qhborel.linalg import Field
from qhborel.modules import module_isomorphic, projective, simple_modules
from qhborel.qh import SimpleOrder, standard_modules
from qhborel.twisted import random_rank2_twist, simple_twisted

from conftest import chain_algebra, random_unit


# ----------------------------------------------------------------------------
# path-counting oracle for the Auslander pair
#
# B is the full DAG on 1..n, so e_k P_i^B has 2^(k-i-1) paths for k > i.  Q_i is
# Delta-filtered with those multiplicities and P_v carries Delta_v, ..., Delta_n,
# so P_v occurs in Q_i with multiplicity d_v - d_{v-1}.

def paths(i, k):
    if k < i:
        return 0
    return 1 if k == i else 2 ** (k - i - 1)


def q_multiplicities(n, i):
    d = [paths(i, k) for k in range(n + 1)]
    return {k: d[k] - d[k - 1] for k in range(1, n + 1) if d[k] != d[k - 1]}


def composition_multiplicity(n, j, v):
    """[Q_j : L_v] = sum over k >= max(j, v) of paths(j, k) (each Delta_k has L_v once when v <= k)."""
    return sum(paths(j, k) for k in range(max(j, v), n + 1))


def oracle_dim_R(n):
    return sum(m * composition_multiplicity(n, j, v)
               for i in range(1, n + 1) for v, m in q_multiplicities(n, i).items()
               for j in range(1, n + 1))


@pytest.fixture(scope="module")
def synthesized():
    return {n: synthesize_borel_pair(auslander_algebra(n), SimpleOrder.natural(n)) for n in (1, 2, 3, 4)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_synthesis_matches_path_counting(synthesized, n):
    syn = synthesized[n]
    assert syn.R.dim == oracle_dim_R(n) == fenwick_projectives(n).dim_R()
    for i in range(1, n + 1):
        assert syn.multiplicities()[i] == q_multiplicities(n, i)
    assert syn.B.dim == 2 ** n - 1
    assert syn.recon.relations == []


@pytest.mark.parametrize("n", [2, 3])
def test_synthesized_pair_is_regular_exact_borel(synthesized, n):
    rep = synthesized[n].report
    assert rep.is_exact_borel and rep.regular is True and rep.normal == "true"


def test_fenwick_sizes():
    for n in range(1, 7):
        fw = fenwick_projectives(n)
        assert len(fw.I) == 2 ** (n - 1)
        for i in range(1, n + 1):
            assert fw.multiplicities(i) == q_multiplicities(n, i)


def test_synthesis_rejects_non_qh_input():
    q = Quiver(1, ((1, 1, "x"),))
    A = build_path_algebra(q, [[(1, q.path_from_names(["x", "x"]))]])
    with pytest.raises(SynthesisError):
        synthesize_borel_pair(A, SimpleOrder(1))


def test_synthesis_on_two_source(two_source):
    syn = synthesize_borel_pair(two_source.A, two_source.order)
    assert syn.B.dim == two_source.B.dim == 5
    assert syn.R.dim == two_source.R.dim
    assert syn.report.is_exact_borel


# ----------------------------------------------------------------------------
# reconstruction

def test_reconstruct_semisimple():
    A = semisimple(Field(), 3)
    rec = reconstruct(ExtModel(simple_modules(A)).model)
    assert len(rec.quiver.arrows) == 0
    assert rec.algebra.dim == 3


def test_reconstruct_auslander_is_free_dag():
    n = 3
    model = truncate(ExtModel(standard_modules(auslander_algebra(n), SimpleOrder.natural(n))).model)
    rec = reconstruct(model)
    assert len(rec.quiver.arrows) == n * (n - 1) // 2
    assert rec.relations == []
    assert rec.algebra.dim == 7


def test_reconstruct_koszul_chain():
    # Ext of the simples of 1 -> 2 -> 3 with the composite killed gives the same algebra back
    A = chain_algebra(3, [["c2", "c1"]])
    rec = reconstruct(ExtModel(simple_modules(A)).model)
    assert len(rec.quiver.arrows) == 2
    assert len(rec.relations) == 1 and len(rec.relations[0]) == 1
    assert rec.algebra.dim == 5


def test_reconstruct_long_relation():
    A = chain_algebra(4, [["c3", "c2", "c1"]])
    rec = reconstruct(ExtModel(simple_modules(A)).model)
    assert [len(t[0][1]) for t in rec.relations] == [3]
    assert rec.algebra.dim == A.dim


def test_reconstruct_needs_coconnected_model():
    model = ExtModel(standard_modules(auslander_algebra(2), SimpleOrder.natural(2))).model
    with pytest.raises(AInftyError):
        reconstruct(model)


def test_keller_module_round_trip():
    A = chain_algebra(3, [["c2", "c1"]])
    rec = reconstruct(ExtModel(simple_modules(A)).model)
    B = rec.algebra
    for v in range(B.n_vertices):
        P = projective(B, v)
        back = keller_module(rec, twisted_from_module(rec, P))
        assert module_isomorphic(back, P) is not None
        S = keller_module(rec, simple_twisted(rec.model, v))
        assert module_isomorphic(S, simple_modules(B)[v]) is not None


# ----------------------------------------------------------------------------
# conjugacy

def test_known_conjugating_unit(two_source):
    ts = two_source
    iota2 = ts.iota.compose_automorphism(ts.action_R)
    n = ts.named
    u = la_add(la_add(n["id_P1"], n["id_P2"]), la_add(n["id_P3"], [-x for x in n["id_P3'"]]))
    assert verify_conjugation(ts.iota, iota2, u)
    res = conjugate_subalgebras(ts.iota, iota2)
    assert res.status == "found"
    assert verify_conjugation(ts.iota, iota2, res.unit)


@pytest.mark.parametrize("which", ["two_source", "auslander3"])
def test_conjugacy_round_trip(request, which):
    ex = request.getfixturevalue(which)
    rng = random.Random(31)
    for _ in range(20):
        v = random_unit(ex.R, rng)
        emb2 = ex.iota.conjugate(v)
        res = conjugate_subalgebras(ex.iota, emb2, rng)
        assert res.status == "found"
        assert verify_conjugation(ex.iota, emb2, res.unit)


def test_dimension_mismatch_fails_precondition(counterexample):
    A = counterexample.A
    whole = SubalgebraEmbedding(A, A, A.field.identity(A.dim))
    res = conjugate_subalgebras(counterexample.iota, whole)
    assert res.status == "precondition failed"
    assert res.unit is None


# ----------------------------------------------------------------------------
# diagram commutation on samples

def _samples(count, seed):
    def fn(model):
        rng = random.Random(seed)
        out = [simple_twisted(model, i) for i in range(model.n_obj)]
        while len(out) < model.n_obj + count:
            z = random_rank2_twist(model, rng)
            if z is not None:
                out.append(z)
        return out
    return fn


def test_diagram_commutes_two_source(two_source):
    iota2 = two_source.iota.compose_automorphism(two_source.action_R)
    rep = check_diagram_commutes(two_source.iota, iota2, samples_fn=_samples(10, 7))
    assert rep.commutes and rep.samples >= 13


def test_diagram_commutes_auslander(auslander3):
    v = random_unit(auslander3.R, random.Random(8))
    emb2 = auslander3.iota.conjugate(v)
    rep = check_diagram_commutes(auslander3.iota, emb2, samples_fn=_samples(10, 3))
    assert rep.commutes and rep.samples >= 13
