import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qhborel import linalg as la
from qhborel.algebra import AlgebraError, Quiver, build_path_algebra, path_element, semisimple
from qhborel.examples import la_add
from qhborel.linalg import Field
from qhborel.qh import SimpleOrder
from qhborel.skew import (
    Cocycle,
    GroupAction,
    ScopeError,
    action_char_polys,
    automorphism_from_images,
    check_invariant_order,
    classify_compatible_twists,
    cocycle_from_generator,
    cyclic_action,
    equivariance_check,
    generating_basis_subset,
    invariant_borel_obstruction,
    is_stable,
    skew_group_algebra,
    trivial_action,
    twist_action,
)

from conftest import corpus, random_unit


def neg(x):
    return [-c for c in x]


def combo(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = la_add(out, p)
    return out


@pytest.fixture(scope="module")
def ts_action(two_source):
    return cyclic_action(two_source.R, two_source.action_R, 2)


def case_one(ts, eps):
    n = ts.named
    e2 = n["id_P2"] if eps == 1 else neg(n["id_P2"])
    return combo(n["id_P1"], e2, neg(n["id_P3"]), neg(n["id_P3'"]))


def case_two(ts, eps, lam):
    n = ts.named
    R = ts.R
    e2 = n["id_P2"] if eps == 1 else neg(n["id_P2"])
    return combo(n["id_P1"], e2, n["id_P3"], R.scale(R.field(lam), n["f33'"]), neg(n["id_P3'"]))


def conjugation(A, u):
    return A.left_matrix(u) * A.right_matrix(A.inverse(u))


# ----------------------------------------------------------------------------
# skew group algebras

def test_skew_algebra_of_trivial_group(two_source):
    A = two_source.A
    S = skew_group_algebra(A, trivial_action(A))
    assert S.dim == A.dim
    assert S.check_associative() and S.check_unit()


def test_group_algebra_of_order_two():
    k = semisimple(Field(), 1)
    S = skew_group_algebra(k, cyclic_action(k, Field().identity(1), 2))
    assert S.dim == 2
    assert S.check_associative() and S.check_unit()


def test_skew_algebra_of_two_source(two_source):
    A = two_source.A
    S = skew_group_algebra(A, cyclic_action(A, two_source.action_A, 2))
    assert S.dim == 10
    assert S.check_associative() and S.check_unit()


@given(st.integers(0, 4), st.integers(2, 3))
def test_skew_algebra_dimension_and_axioms(k, N):
    name, A, order = corpus()[k]
    S = skew_group_algebra(A, cyclic_action(A, A.field.identity(A.dim), N))
    assert S.dim == N * A.dim
    assert S.check_associative() and S.check_unit()


# ----------------------------------------------------------------------------
# invariant orders

def swap_algebra():
    """Two disjoint arrows 1 -> 2 and 3 -> 4 with the automorphism exchanging them."""
    q = Quiver(4, ((1, 2, "a"), (3, 4, "b")))
    A = build_path_algebra(q, [])
    pairs = [(path_element(A, [x]), path_element(A, [y]))
             for x, y in (("e1", "e3"), ("e3", "e1"), ("e2", "e4"), ("e4", "e2"), ("a", "b"), ("b", "a"))]
    return A, automorphism_from_images(A, pairs)


def test_invariant_order_examples(two_source, auslander3_action):
    A = two_source.A
    assert check_invariant_order(A, two_source.order, trivial_action(A))
    assert check_invariant_order(A, two_source.order, cyclic_action(A, two_source.action_A, 2))
    ax = auslander3_action
    assert check_invariant_order(ax.R, ax.order_R, cyclic_action(ax.R, ax.action_R, 3))


def test_swap_breaks_one_sided_order():
    A, M = swap_algebra()
    act = cyclic_action(A, M, 2)
    assert not check_invariant_order(A, SimpleOrder(4, [(0, 1)]), act)
    # g and h act independently, so each orbit must sit entirely below the other
    assert not check_invariant_order(A, SimpleOrder(4, [(0, 1), (2, 3)]), act)
    assert check_invariant_order(A, SimpleOrder(4, [(0, 1), (0, 3), (2, 1), (2, 3)]), act)


# ----------------------------------------------------------------------------
# actions, cocycles and twists

def test_action_axioms_are_checked():
    A, M = swap_algebra()
    with pytest.raises(AlgebraError):
        cyclic_action(A, M, 3)
    F3 = Field(3)
    k = semisimple(F3, 1)
    with pytest.raises(ScopeError):
        cyclic_action(k, F3.identity(1), 3)


def test_klein_four_is_out_of_scope(two_source):
    R = two_source.R
    I = R.field.identity(R.dim)
    table = [[g ^ h for h in range(4)] for g in range(4)]
    act = GroupAction(R, [I] * 4, table)
    with pytest.raises(ScopeError):
        classify_compatible_twists(R, act, two_source.iota)


def test_second_example_action_is_inner(two_source):
    n = two_source.named
    v = combo(neg(n["id_P1"]), n["id_P3'"], n["id_P2"], n["id_P3"])
    assert la.equal(conjugation(two_source.R, v), two_source.action_R)


def test_action_from_generator_images(two_source):
    R = two_source.R
    M = two_source.action_R
    gens = generating_basis_subset(R)
    pairs = [(R.basis(k), la.col(M, k)) for k in gens]
    assert la.equal(automorphism_from_images(R, pairs), M)


def test_unit_cocycle_leaves_action_unchanged(ts_action):
    R = ts_action.algebra
    tw = twist_action(ts_action, cocycle_from_generator(ts_action, R.unit))
    assert all(la.equal(a, b) for a, b in zip(tw.mats, ts_action.mats))


@pytest.mark.parametrize("eps", [1, -1])
def test_case_one_twist(two_source, ts_action, eps):
    R = two_source.R
    rho = cocycle_from_generator(ts_action, case_one(two_source, eps))
    assert rho.verify()
    tw = twist_action(ts_action, rho)
    f21 = two_source.named["f21"]
    assert tw.apply(1, f21) == R.scale(R.field(-eps), f21)
    assert is_stable(tw, two_source.iota)
    t = sympy.Symbol("t")
    expect = sympy.factor((t - 1) ** 6 * (t + eps) ** 3)
    assert sympy.factor(sympy.sympify(action_char_polys(tw)["g"].replace("^", "**"))) == expect


def test_bad_cocycles_are_rejected(two_source, ts_action):
    R = two_source.R
    with pytest.raises(AlgebraError):
        twist_action(ts_action, cocycle_from_generator(ts_action, two_source.named["id_P1"]))
    two = R.scale(R.field(2), R.unit)
    rho = cocycle_from_generator(ts_action, two)
    assert not rho.verify()
    with pytest.raises(AlgebraError):
        twist_action(ts_action, rho)
    assert not Cocycle(ts_action, [two, two]).verify()


def test_char_polys_of_second_example(ts_action):
    polys = action_char_polys(ts_action)
    assert polys == {"e": "(t - 1)^9", "g": "(t - 1)^8*(t + 1)"}


@given(st.integers(0, 10**6))
def test_char_polys_are_conjugation_invariant(seed):
    from qhborel.examples import example_two_source
    ts = example_two_source()
    act = cyclic_action(ts.R, ts.action_R, 2)
    u = random_unit(ts.R, random.Random(seed))
    C = conjugation(ts.R, u)
    conj = cyclic_action(ts.R, C * ts.action_R * C.inv(), 2)
    assert action_char_polys(conj) == action_char_polys(act)


# ----------------------------------------------------------------------------
# classification and obstruction

def _member(fam, target):
    eqs = [sympy.expand(sympy.sympify(c) - sympy.Rational(str(x))) for c, x in zip(fam.coeffs, target)]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return True
    return bool(fam.params) and bool(sympy.solve(eqs, fam.params, dict=True))


def test_classification_contains_displayed_forms(two_source, ts_action):
    cl = classify_compatible_twists(two_source.R, ts_action, two_source.iota)
    assert cl.complete
    forms = [case_one(two_source, e) for e in (1, -1)]
    forms += [case_two(two_source, e, lam) for e in (1, -1) for lam in (0, 1, -3)]
    for r in forms:
        rho = cocycle_from_generator(ts_action, r)
        assert rho.verify() and is_stable(twist_action(ts_action, rho), two_source.iota)
        assert any(_member(f, r) for f in cl.families)
    # every listed family really stabilizes B, at several parameter values
    for f in cl.families:
        for vals in ({}, {str(p): 2 for p in f.params}):
            rho = f.instantiate(ts_action, vals)
            assert rho.verify() and is_stable(twist_action(ts_action, rho), two_source.iota)


def test_classification_for_trivial_group_element(two_source):
    R = two_source.R
    act = cyclic_action(R, R.field.identity(R.dim), 2)
    cl = classify_compatible_twists(R, act, two_source.iota)
    assert any(_member(f, R.unit) for f in cl.families)


def test_auslander_classification_is_nonempty():
    from qhborel.examples import example_auslander
    ex = example_auslander(2, N=3)
    act = cyclic_action(ex.R, ex.action_R, 3)
    cl = classify_compatible_twists(ex.R, act, ex.iota)
    assert cl.families and not cl.complete


def test_two_source_is_obstructed(two_source, ts_action):
    v = invariant_borel_obstruction(two_source.R, ts_action, two_source.iota)
    assert v.verdict == "obstructed"
    t = sympy.Symbol("t")
    seen = {sympy.factor(sympy.sympify(p["g"].replace("^", "**"))) for p in v.table.values()}
    expected = {sympy.factor((t - 1) ** 8 * (t + 1))}
    for eps in (1, -1):
        expected.add(sympy.factor((t - 1) ** 6 * (t + eps) ** 3))
        expected.add(sympy.factor((t - 1) ** 4 * (t + 1) ** 2 * (t + eps) ** 2 * (t - eps)))
    assert seen == expected


def test_auslander_has_invariant_borel(auslander3_action):
    ax = auslander3_action
    act = cyclic_action(ax.R, ax.action_R, 3)
    v = invariant_borel_obstruction(ax.R, act, ax.iota)
    assert v.verdict == "exists-with-witness"
    assert is_stable(act, v.witness)


def test_trivial_action_has_invariant_borel(two_source):
    R = two_source.R
    v = invariant_borel_obstruction(R, trivial_action(R), two_source.iota)
    assert v.verdict == "exists-with-witness"
    assert v.witness is two_source.iota


def test_inner_action_from_the_subalgebra_gives_witness(two_source):
    # conjugation by a unit of iota(B) fixes iota(B); a conjugated copy must be repaired
    ts = two_source
    R, B = ts.R, ts.B
    w = ts.iota(combo(B.basis(B.index("e1")), neg(B.basis(B.index("e2"))), B.basis(B.index("e3"))))
    act = cyclic_action(R, conjugation(R, w), 2)
    assert is_stable(act, ts.iota)
    emb2 = ts.iota.conjugate(random_unit(R, random.Random(3)))
    assert not is_stable(act, emb2)
    v = invariant_borel_obstruction(R, act, emb2)
    assert v.verdict == "exists-with-witness"
    assert is_stable(act, v.witness)


# ----------------------------------------------------------------------------
# equivariance of the Auslander pair

def test_auslander_embedding_is_equivariant(auslander3_action):
    ax = auslander3_action
    aR = cyclic_action(ax.R, ax.action_R, 3)
    aB = cyclic_action(ax.B, ax.action_B, 3)
    assert equivariance_check(ax.iota, aB, aR)
    assert is_stable(aR, ax.iota)
    restricted = aR.restrict(ax.iota)
    assert all(la.equal(a, b) for a, b in zip(restricted.mats, aB.mats))


def test_perturbed_subalgebra_action_breaks_equivariance(auslander3_action):
    ax = auslander3_action
    aR = cyclic_action(ax.R, ax.action_R, 3)
    M = ax.action_B.__copy__() if hasattr(ax.action_B, "__copy__") else ax.action_B * 1
    k = next(k for k in range(ax.B.dim) if M[k, k] != 1)
    M[k, k] = M[k, k] * ax.xi
    mats = [ax.field.identity(ax.B.dim), M, M * M]
    bad = GroupAction(ax.B, mats, aR.table, check=False)
    assert not equivariance_check(ax.iota, bad, aR)


def test_trivial_actions_are_equivariant(two_source):
    assert equivariance_check(two_source.iota, trivial_action(two_source.B), trivial_action(two_source.R))
