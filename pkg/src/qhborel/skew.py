"""Finite group actions: skew group algebras, invariant orders, cocycle twists
and the existence/obstruction analysis for invariant Borel subalgebras."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import sympy

from . import linalg as la
from .algebra import AlgebraError, FinDimAlgebra, SubalgebraEmbedding, format_poly_factored
from .qh import SimpleOrder


class ScopeError(AlgebraError):
    pass


# ----------------------------------------------------------------------------
# group actions

class GroupAction:
    """A finite group acting by algebra automorphisms.

    ``mats[g]`` is the matrix of g on the algebra basis; ``table[g][h]`` is the
    index of gh; element 0 is the identity.
    """

    def __init__(self, algebra: FinDimAlgebra, mats, table, names=None, check: bool = True):
        self.algebra = algebra
        self.mats = list(mats)
        self.table = [list(r) for r in table]
        self.order = len(self.mats)
        self.names = names or [f"g{k}" for k in range(self.order)]
        if check:
            self.verify()

    def verify(self):
        A = self.algebra
        F = A.field
        if F.p and self.order % F.p == 0:
            raise ScopeError("the characteristic divides the group order")
        if not la.equal(self.mats[0], F.identity(A.dim)):
            raise AlgebraError("element 0 must act as the identity")
        for g in range(self.order):
            for h in range(self.order):
                if not la.equal(self.mats[g] * self.mats[h], self.mats[self.table[g][h]]):
                    raise AlgebraError("group law fails for the action matrices")
        for g, M in enumerate(self.mats):
            if not is_automorphism(A, M):
                raise AlgebraError(f"{self.names[g]} is not an algebra automorphism")

    def apply(self, g: int, x):
        return la.apply_to_vector(self.mats[g], x)

    def inverse_index(self, g: int) -> int:
        return next(h for h in range(self.order) if self.table[g][h] == 0)

    def restrict(self, emb: SubalgebraEmbedding) -> "GroupAction | None":
        """The action on a subalgebra stable under every group element (None if not stable)."""
        B = emb.sub
        mats = []
        for M in self.mats:
            img = M * emb.matrix
            sol = la.solve(emb.matrix, img)
            if sol is None:
                return None
            mats.append(sol)
        return GroupAction(B, mats, self.table, self.names, check=True)


def is_automorphism(A: FinDimAlgebra, M) -> bool:
    if not la.is_invertible_matrix(M):
        return False
    if la.apply_to_vector(M, A.unit) != A.unit:
        return False
    imgs = [la.col(M, i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = la.apply_to_vector(M, A.mul_basis(i, j))
            if lhs != A.mul(imgs[i], imgs[j]):
                return False
    return True


def _closure(A: FinDimAlgebra, pairs):
    """Grow (x, y) pairs under products until the xs span their generated subalgebra.

    Returns (X, Y): independent xs as columns and the matching ys."""
    F = A.field
    xs, ys = [], []

    def span_has(v):
        return bool(xs) and la.span_contains(la.hstack([F.column(x) for x in xs]), F.column(v))

    queue = [(list(A.unit), list(A.unit))] + [(list(x), list(y)) for x, y in pairs]
    while queue:
        x, y = queue.pop(0)
        if A.is_zero(x) or span_has(x):
            continue
        new = [(A.mul(x, x2), A.mul(y, y2)) for x2, y2 in zip(xs, ys)]
        new += [(A.mul(x2, x), A.mul(y2, y)) for x2, y2 in zip(xs, ys)]
        xs.append(x)
        ys.append(y)
        queue += [(x, y) for x, y in [(A.mul(x, x), A.mul(y, y))] + new]
    X = la.hstack([F.zeros(A.dim, 0)] + [F.column(x) for x in xs])
    Y = la.hstack([F.zeros(A.dim, 0)] + [F.column(y) for y in ys])
    return X, Y


def automorphism_from_images(A: FinDimAlgebra, pairs):
    """The automorphism with x -> y for the given pairs (the xs must generate A)."""
    X, Y = _closure(A, pairs)
    if X.ncols() != A.dim:
        raise AlgebraError("the given elements do not generate the algebra")
    M = Y * la.inverse(X)
    for x, y in pairs:
        if la.apply_to_vector(M, x) != list(y):
            raise AlgebraError("generator images are inconsistent with the products")
    if not is_automorphism(A, M):
        raise AlgebraError("generator images do not define an automorphism")
    return M


def generating_basis_subset(A: FinDimAlgebra):
    """Basis indices, greedily chosen in order, that generate A as an algebra."""
    chosen = []
    pairs = []
    for k in range(A.dim):
        X, _ = _closure(A, pairs)
        if X.ncols() == A.dim:
            break
        if la.span_contains(X, A.field.column(A.basis(k))):
            continue
        chosen.append(k)
        pairs.append((A.basis(k), A.basis(k)))
    return chosen


def cyclic_action(A: FinDimAlgebra, M, N: int, check: bool = True) -> GroupAction:
    """The cyclic group of order N generated by the automorphism M."""
    mats = [A.field.identity(A.dim)]
    for _ in range(N - 1):
        mats.append(M * mats[-1])
    table = [[(g + h) % N for h in range(N)] for g in range(N)]
    return GroupAction(A, mats, table, ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, N)], check)


def trivial_action(A: FinDimAlgebra) -> GroupAction:
    return cyclic_action(A, A.field.identity(A.dim), 1)


def is_cyclic(act: GroupAction):
    """(generator, N) when the group is cyclic with the stored elements g^k at index k."""
    N = act.order
    if N == 1 or all(act.table[1][k] == (k + 1) % N for k in range(N)):
        return 1 % N, N
    return None


# ----------------------------------------------------------------------------
# skew group algebra

def _idempotent_permutation(A: FinDimAlgebra, M):
    """v -> w with g(e_v) = e_w, when g permutes the vertex idempotents."""
    perm = []
    for e in A.idempotents:
        img = la.apply_to_vector(M, e)
        w = next((k for k, f in enumerate(A.idempotents) if f == img), None)
        if w is None:
            return None
        perm.append(w)
    return perm


def skew_group_algebra(A: FinDimAlgebra, act: GroupAction) -> FinDimAlgebra:
    """A * G on the basis b (x) g with (a (x) g)(a' (x) h) = a g(a') (x) gh.

    The action must permute the vertex idempotents (so e_v (x) 1 give Peirce tags).
    """
    F = A.field
    n, N = A.dim, act.order
    perms = [_idempotent_permutation(A, M) for M in act.mats]
    if any(p is None for p in perms):
        raise ScopeError("skew group algebra needs an action permuting the vertex idempotents")
    imgs = [[la.col(act.mats[g], j) for j in range(n)] for g in range(N)]
    dim = n * N
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for g in range(N):
        for i in range(n):
            bi = A.basis(i)
            for h in range(N):
                gh = act.table[g][h]
                for j in range(n):
                    prod = A.mul(bi, imgs[g][j])
                    out = {gh * n + k: c for k, c in enumerate(prod) if c != 0}
                    table[g * n + i][h * n + j] = out
    unit = [F.zero] * dim
    for k, c in enumerate(A.unit):
        unit[k] = c
    idems = []
    for e in A.idempotents:
        v = [F.zero] * dim
        for k, c in enumerate(e):
            v[k] = c
        idems.append(v)
    tags = []
    names = []
    for g in range(N):
        inv = {w: v for v, w in enumerate(perms[g])}
        for i in range(n):
            t, s = A.tags[i]
            tags.append((t, inv[s]))
            names.append(f"{A.names[i]}*{act.names[g]}")
    return FinDimAlgebra(F, names, table, unit, idems, tags)


# ----------------------------------------------------------------------------
# invariant orders

def simple_permutation(A: FinDimAlgebra, M):
    """Permutation of the isomorphism classes of simples induced by the automorphism M."""
    rad = A.radical()
    classes = A.iso_classes()
    out = []
    for cls in classes:
        x = la.apply_to_vector(M, A.idempotents[cls[0]])
        hits = []
        for c2, cls2 in enumerate(classes):
            e = A.zero()
            for v in cls2:
                e = A.add(e, A.idempotents[v])
            y = A.field.column(A.mul(e, x))
            inside = la.span_contains(rad, y) if rad.ncols() else la.is_zero(y)
            if not inside:
                hits.append(c2)
        if len(hits) != 1:
            raise AlgebraError("automorphism does not map a primitive idempotent to a primitive one")
        out.append(hits[0])
    return out


def check_invariant_order(A: FinDimAlgebra, order: SimpleOrder, act: GroupAction) -> bool:
    """L < L' iff gL < hL' for all simples L, L' and group elements g, h."""
    perms = [simple_permutation(A, M) for M in act.mats]
    n = order.n
    for a in range(n):
        for b in range(n):
            base = order.less(a, b)
            for pg in perms:
                for ph in perms:
                    if order.less(pg[a], ph[b]) != base:
                        return False
    return True


# ----------------------------------------------------------------------------
# cocycles and twisted actions

@dataclass
class Cocycle:
    """rho: G -> units of A with rho(e) = 1 and rho(gh) = rho(g) g(rho(h))."""
    act: GroupAction
    values: list

    def verify(self) -> bool:
        A = self.act.algebra
        if self.values[0] != A.unit:
            return False
        for v in self.values:
            if not A.is_invertible(v):
                return False
        for g in range(self.act.order):
            for h in range(self.act.order):
                lhs = self.values[self.act.table[g][h]]
                rhs = A.mul(self.values[g], self.act.apply(g, self.values[h]))
                if lhs != rhs:
                    return False
        return True


def cocycle_from_generator(act: GroupAction, r) -> Cocycle:
    """For a cyclic group: rho(g^k) = r g(r) ... g^{k-1}(r)."""
    cyc = is_cyclic(act)
    if cyc is None:
        raise ScopeError("cocycle_from_generator needs a cyclic group")
    A = act.algebra
    vals = [A.unit]
    for k in range(1, act.order):
        vals.append(A.mul(vals[-1], act.apply(k - 1, r)) if k > 1 else list(r))
    # vals[k] = rho(g^{k-1}) g^{k-1}(r)
    return Cocycle(act, vals)


def twist_action(act: GroupAction, rho: Cocycle) -> GroupAction:
    """g * a = rho(g) g(a) rho(g)^{-1}."""
    A = act.algebra
    for v in rho.values:
        if not A.is_invertible(v):
            raise AlgebraError("cocycle value is not a unit")
    if not rho.verify():
        raise AlgebraError("cocycle condition fails")
    mats = []
    for g, M in enumerate(act.mats):
        r = rho.values[g]
        rinv = A.inverse(r)
        mats.append(A.left_matrix(r) * A.right_matrix(rinv) * M)
    return GroupAction(A, mats, act.table, act.names, check=True)


def action_char_polys(act: GroupAction, var: str = "t") -> dict:
    """{group element name: factored characteristic polynomial}."""
    return {act.names[g]: format_poly_factored(M, var) for g, M in enumerate(act.mats)}


def equivariance_check(iota: SubalgebraEmbedding, actB: GroupAction, actR: GroupAction) -> bool:
    """iota o g = g o iota for every group element."""
    if actB.order != actR.order:
        return False
    return all(la.equal(actR.mats[g] * iota.matrix, iota.matrix * actB.mats[g]) for g in range(actB.order))


def is_stable(act: GroupAction, emb: SubalgebraEmbedding) -> bool:
    """g(iota(B)) = iota(B) for all g."""
    I = emb.matrix
    return all(la.rank(la.hstack([I, M * I])) == emb.sub.dim for M in act.mats)


# ----------------------------------------------------------------------------
# classification of compatible twists

@dataclass
class TwistFamily:
    """rho(g) = sum_k coeffs[k] b_k with sympy expressions in ``params``."""
    coeffs: list
    params: list
    label: str = ""

    def instantiate(self, act: GroupAction, values=None) -> Cocycle:
        A = act.algebra
        F = A.field
        values = values or {}
        subs = {p: values.get(str(p), 0) for p in self.params}
        r = []
        for c in self.coeffs:
            v = sympy.Rational(sympy.sympify(c).subs(subs))
            r.append(F(int(v.p)) / F(int(v.q)))
        return cocycle_from_generator(act, r)

    def describe(self, A: FinDimAlgebra) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            c = sympy.sympify(c)
            if c == 0:
                continue
            s = str(c)
            if c == 1:
                terms.append(A.names[k])
            elif c == -1:
                terms.append(f"-{A.names[k]}")
            else:
                terms.append(f"({s})*{A.names[k]}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclass
class Classification:
    families: list
    complete: bool
    method: str
    notes: list = field(default_factory=list)


def _to_sympy(F, x):
    n, d = F.to_int_pair(x)
    return sympy.Rational(n, d)


def _sym_mul(A, x, y):
    out = [0] * A.dim
    F = A.field
    for i, a in enumerate(x):
        if a == 0:
            continue
        for j, b in enumerate(y):
            if b == 0:
                continue
            for k, c in A.table[i][j].items():
                out[k] += a * b * _to_sympy(F, c)
    return out


def _sym_apply(M, F, v):
    n = M.nrows()
    return [sum(_to_sympy(F, M[i, j]) * v[j] for j in range(M.ncols()) if M[i, j] != 0) for i in range(n)]


def _rad_squared_zero(A: FinDimAlgebra) -> bool:
    rad = A.radical()
    for a in range(rad.ncols()):
        x = la.col(rad, a)
        for b in range(rad.ncols()):
            if not A.is_zero(A.mul(x, la.col(rad, b))):
                return False
    return True


def classify_compatible_twists(A: FinDimAlgebra, act: GroupAction, emb: SubalgebraEmbedding,
                               max_dim: int = 32, max_order: int = 6, rng=None) -> Classification:
    """Cocycles rho (cyclic G) with g * B = B for the twisted action.

    Over Q with rad(A)^2 = 0 the constraint system (cocycle condition and
    rho g(B) rho^{-1} inside B, using rho^{-1} = g(rho) ... g^{N-1}(rho)) is
    solved exactly; families are normalized by roots of unity and reported
    with their free parameters.  Otherwise a bounded search over
    rho = sum_v c_v e_v (c_v N-th roots of unity) is run and the result is
    marked incomplete.
    """
    F = A.field
    cyc = is_cyclic(act)
    if cyc is None:
        raise ScopeError("twist classification needs a cyclic group")
    N = act.order
    if A.dim > max_dim or N > max_order:
        raise ScopeError(f"twist classification is limited to dim <= {max_dim} and |G| <= {max_order}")
    if F.p == 0 and _rad_squared_zero(A):
        return _classify_exact(A, act, emb)
    return _classify_bounded(A, act, emb)


def _classify_exact(A, act, emb) -> Classification:
    F = A.field
    N = act.order
    n = A.dim
    xs = sympy.symbols(f"r0:{n}")
    rho = list(xs)
    G = act.mats[1 % N]
    pows = [rho]
    for _ in range(N - 1):
        pows.append(_sym_apply(G, F, pows[-1]))
    # rho^{-1} = g(rho) g^2(rho) ... g^{N-1}(rho)
    inv = [_to_sympy(F, c) for c in A.unit]
    for p in pows[1:]:
        inv = _sym_mul(A, inv, p)
    eqs = []
    prod = _sym_mul(A, rho, inv)
    unit = [_to_sympy(F, c) for c in A.unit]
    eqs += [sympy.expand(a - b) for a, b in zip(prod, unit)]
    Ann = la.kernel(la.column_space(emb.matrix).transpose())
    for b in range(emb.sub.dim):
        x = [_to_sympy(F, c) for c in emb(emb.sub.basis(b))]
        y = _sym_mul(A, _sym_mul(A, rho, _sym_apply(G, F, x)), inv)
        for c in range(Ann.ncols()):
            eqs.append(sympy.expand(sum(_to_sympy(F, Ann[r, c]) * y[r] for r in range(n) if Ann[r, c] != 0)))
    eqs = [e for e in eqs if e != 0]
    sols = sympy.solve(eqs, xs, dict=True)
    roots = [r for r in sympy.solve(sympy.Symbol("z") ** N - 1) if r.is_rational]
    fams, seen = [], set()
    e0 = A.vertex_of_idempotent_index()[0]
    for s in sols:
        coeffs = [sympy.sympify(s.get(x, x)) for x in xs]
        # normalize: scale by a root of unity so that the first vertex coefficient is 1 when possible
        lead = coeffs[e0] if e0 is not None else None
        for z in roots:
            if lead is not None and sympy.simplify(z * lead - 1) == 0:
                coeffs = [sympy.expand(z * c) for c in coeffs]
                break
        free = sorted({p for c in coeffs for p in c.free_symbols}, key=str)
        ren = {p: sympy.Symbol(f"t{k + 1}") for k, p in enumerate(free)}
        coeffs = [c.subs(ren) for c in coeffs]
        # parameters are only defined up to sign
        variants = []
        for signs in itertools.product((1, -1), repeat=len(free)):
            sub = {ren[p]: sg * ren[p] for p, sg in zip(free, signs)}
            variants.append([sympy.expand(c.subs(sub, simultaneous=True)) for c in coeffs])
        coeffs = min(variants, key=lambda v: [str(c) for c in v])
        key = tuple(str(c) for c in coeffs)
        if key in seen:
            continue
        seen.add(key)
        fams.append(TwistFamily(coeffs, [ren[p] for p in free]))
    fams = [f for f in fams if not any(g is not f and _specializes(f, g) for g in fams)]
    fams.sort(key=lambda f: (len(f.params), [str(c) for c in f.coeffs]))
    for k, f in enumerate(fams):
        f.label = f"family {k + 1}"
    return Classification(fams, True, "exact polynomial solve (rad^2 = 0, characteristic 0)")


def _specializes(f: TwistFamily, g: TwistFamily) -> bool:
    """Is every member of f a member of g (and g strictly larger)?"""
    if len(g.params) <= len(f.params):
        return False
    us = {p: sympy.Symbol(f"u_{p}") for p in f.params}
    eqs = [sympy.expand(a - b.subs(us)) for a, b in zip(g.coeffs, f.coeffs)]
    eqs = [e for e in eqs if e != 0]
    return not eqs or bool(sympy.solve(eqs, g.params, dict=True))


def _classify_bounded(A, act, emb) -> Classification:
    F = A.field
    N = act.order
    roots = [x for x in (F(k) for k in range(1, F.p)) if x ** N == F.one] if F.p else \
        [F(1), F(-1)][: (2 if N % 2 == 0 else 1)]
    nv = A.n_vertices
    fams = []
    G = act.mats[1 % N]
    count = 0
    for cs in itertools.product(roots, repeat=nv):
        if cs[0] != F.one:
            continue
        r = A.zero()
        for v, c in enumerate(cs):
            r = A.add(r, A.scale(c, A.idempotents[v]))
        rho = cocycle_from_generator(act, r)
        count += 1
        if count > 4096:
            break
        if not rho.verify():
            continue
        tw = twist_action(act, rho)
        if is_stable(tw, emb):
            fams.append(TwistFamily([_to_sympy(F, c) if F.p == 0 else int(F.to_int_pair(c)[0]) for c in r], []))
    for k, f in enumerate(fams):
        f.label = f"candidate {k + 1}"
    return Classification(fams, False, "bounded search over vertex-diagonal cocycles",
                          ["classification incomplete outside rad^2 = 0 in characteristic 0"])


# ----------------------------------------------------------------------------
# obstruction analysis

@dataclass
class ObstructionVerdict:
    verdict: str                 # "exists-with-witness" | "obstructed" | "undetermined"
    table: dict                  # label -> {group element: polynomial}
    witness: object = None       # SubalgebraEmbedding of an invariant Borel subalgebra
    conjugator: object = None
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {"verdict": self.verdict, "char_polys": self.table, "notes": self.notes,
                "conjugator": None if self.conjugator is None else [str(c) for c in self.conjugator]}


def _conjugator(A, act, rho: Cocycle, rng, draws: int = 64):
    """a in A^x with a g(a)^{-1} = rho(g) for the generator, i.e. a = rho(g) g(a)."""
    F = A.field
    G = act.mats[1 % act.order]
    M = F.identity(A.dim) - A.left_matrix(rho.values[1 % act.order]) * G
    K = la.kernel(M)
    if K.ncols() == 0:
        return None
    tries = draws if not F.p else max(draws, 256)
    for t in range(tries):
        coeffs = [F.one] if K.ncols() == 1 else [F.random_scalar(rng, -3, 3) for _ in range(K.ncols())]
        a = [F.zero] * A.dim
        for c, x in enumerate(coeffs):
            for r in range(A.dim):
                a[r] += x * K[r, c]
        if A.is_invertible(a):
            return a
        if K.ncols() == 1:
            break
    return None


def _sym_matrix(F, M):
    return sympy.Matrix(M.nrows(), M.ncols(), lambda i, j: _to_sympy(F, M[i, j]))


def _twisted_generator_sym(A, act, coeffs):
    """Matrix of a -> rho g(a) rho^{-1} for the generator, rho given symbolically."""
    F = A.field
    N = act.order
    G = act.mats[1 % N]
    rho = list(coeffs)
    inv = [_to_sympy(F, c) for c in A.unit]
    cur = rho
    for _ in range(N - 1):
        cur = _sym_apply(G, F, cur)
        inv = _sym_mul(A, inv, cur)
    cols = []
    for k in range(A.dim):
        gk = [_to_sympy(F, G[r, k]) for r in range(A.dim)]
        cols.append(_sym_mul(A, _sym_mul(A, rho, gk), inv))
    return sympy.Matrix(A.dim, A.dim, lambda i, j: sympy.expand(cols[j][i]))


def _matching_parameters(A, act, fam: TwistFamily):
    """Parameter values at which the twisted generator has the original characteristic
    polynomial: None when there are none, else a (possibly empty) dict."""
    F = A.field
    t = sympy.Symbol("t")
    base = _sym_matrix(F, act.mats[1 % act.order]).charpoly(t).all_coeffs()
    tw = _twisted_generator_sym(A, act, fam.coeffs).charpoly(t).all_coeffs()
    eqs = [sympy.expand(a - b) for a, b in zip(tw, base)]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return {}
    if not fam.params:
        return None
    sols = sympy.solve(eqs, fam.params, dict=True)
    if not sols:
        return None
    return {str(k): v for k, v in sols[0].items() if not v.free_symbols}


def invariant_borel_obstruction(A: FinDimAlgebra, act: GroupAction, emb: SubalgebraEmbedding,
                                rng=None, samples: int = 2) -> ObstructionVerdict:
    """Decide whether some conjugate a^{-1} B a is G-stable.

    A stable conjugate forces rho = a g(a)^{-1} to be a cocycle whose twisted
    action preserves B and is conjugate to the original action.  Each twist
    family is compared with the original action through the characteristic
    polynomial of the generator (symbolically in the family parameters when the
    classification is exact); a match is turned into a conjugator by solving
    a = rho g(a).
    """
    rng = rng or random.Random(0)
    base = action_char_polys(act)
    table = {"g": base}
    if is_stable(act, emb):
        return ObstructionVerdict("exists-with-witness", table, emb, A.unit,
                                  ["the given subalgebra is already stable"])
    cl = classify_compatible_twists(A, act, emb, rng=rng)
    notes = [cl.method] + cl.notes
    matched = []
    for fam in cl.families:
        pts = [{}] + [{str(p): rng.randint(-5, 5) for p in fam.params} for _ in range(samples if fam.params else 0)]
        for vals in pts:
            rho = fam.instantiate(act, vals)
            if not rho.verify():
                continue
            polys = action_char_polys(twist_action(act, rho))
            label = fam.describe(A)
            if vals:
                label += " @ " + ",".join(f"{a}={b}" for a, b in sorted(vals.items()))
            table[label] = polys
            if polys == base:
                matched.append(rho)
        if A.field.p == 0 and cl.complete:
            vals = _matching_parameters(A, act, fam)
            if vals is not None:
                rho = fam.instantiate(act, vals)
                if rho.verify():
                    matched.append(rho)
    for rho in matched:
        a = _conjugator(A, act, rho, rng)
        if a is None:
            continue
        wit = emb.conjugate(A.inverse(a), a, name="invariant Borel")
        if is_stable(act, wit):
            return ObstructionVerdict("exists-with-witness", table, wit, a, notes)
    if not matched and cl.complete:
        notes.append("no compatible twist has the characteristic polynomial of the original action")
        return ObstructionVerdict("obstructed", table, None, None, notes)
    notes.append("only cocycle twists of the given pair were examined")
    return ObstructionVerdict("undetermined", table, None, None, notes)
