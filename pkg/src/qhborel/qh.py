"""Quasi-hereditary structure: orders on simples, standard modules,
Delta-filtrations and the exact Borel checks."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import networkx as nx

from . import linalg as la
from .algebra import AlgebraError, FinDimAlgebra, SubalgebraEmbedding
from .modules import (
    Representation,
    hom_space,
    induce,
    is_induction_exact,
    isomorphism_status,
    projective,
    quotient,
    simple_modules,
    submodule,
    top_multiplicities,
)


class SimpleOrder:
    """Partial order on simple classes 0..n-1 (transitive closure of the given pairs)."""

    def __init__(self, n: int, pairs=()):
        self.n = n
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(pairs)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("order relations contain a cycle")
        self._less = {(a, b) for a in range(n) for b in nx.descendants(g, a)}
        self.covers = sorted(nx.transitive_reduction(g).edges())

    @classmethod
    def natural(cls, n: int) -> "SimpleOrder":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def from_pairs_1based(cls, n: int, pairs) -> "SimpleOrder":
        return cls(n, [(a - 1, b - 1) for a, b in pairs])

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self._less

    def leq(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self._less

    def transport(self, phi) -> "SimpleOrder":
        """The order pulled back along a bijection phi (list: i -> phi[i])."""
        inv = {v: k for k, v in enumerate(phi)}
        return SimpleOrder(self.n, [(inv[a], inv[b]) for a, b in self._less])

    def __repr__(self):
        return f"SimpleOrder(n={self.n}, covers={[(a + 1, b + 1) for a, b in self.covers]})"


def _generated_submodule(M: Representation, cols):
    """Column space of the submodule generated by the given columns."""
    F = M.field
    if not cols:
        return F.zeros(M.dim, 0)
    E = la.hstack(cols)
    return la.column_space(la.hstack([a * E for a in M.action]))


def standard_modules(A: FinDimAlgebra, order: SimpleOrder):
    """Delta_c = P_c / (sum of images of all maps P_c' -> P_c with c' not <= c)."""
    F = A.field
    classes = A.iso_classes()
    if order.n != len(classes):
        raise ValueError("order size does not match the number of simple modules")
    out = []
    for c, cls in enumerate(classes):
        P = projective(A, cls[0])
        cols = []
        for c2, cls2 in enumerate(classes):
            if order.leq(c2, c):
                continue
            for k in P.indices(cls2[0]):
                cols.append(la.select_columns(F.identity(P.dim), [k]))
        U = _generated_submodule(P, cols)
        D, _ = quotient(P, U, f"Delta{c + 1}")
        out.append(D)
    return out


def composition_factors(M: Representation):
    """Multiplicity of each simple class in M (from the dimension vector)."""
    A = M.algebra
    dv = M.dim_vector()
    return [dv[cls[0]] for cls in A.iso_classes()]


class _Budget:
    def __init__(self, nodes):
        self.nodes = nodes


def _surjection(M: Representation, D: Representation, rng, draws: int = 8):
    H = hom_space(M, D)
    if not H:
        return None
    F = M.field
    cands = list(H)
    for _ in range(draws):
        X = F.zeros(D.dim, M.dim)
        for h in H:
            X += F.random_scalar(rng, -3, 3) * h
        cands.append(X)
    for X in cands:
        if la.rank(X) == D.dim:
            return X
    return None


def delta_filtration(M: Representation, deltas, rng: random.Random | None = None, max_nodes: int = 100000):
    """Indices (top factor first) of a filtration of M by the given modules, or None."""
    rng = rng or random.Random(0)
    budget = _Budget(max_nodes)
    failed = []

    def known_failure(N):
        for K in failed:
            if K.dim_vector() == N.dim_vector() and isomorphism_status(N, K)[0] == "iso":
                return True
        return False

    def rec(N):
        if N.dim == 0:
            return []
        budget.nodes -= 1
        if budget.nodes < 0:
            raise AlgebraError("delta_filtration: node budget exhausted")
        if known_failure(N):
            return None
        dv = N.dim_vector()
        for j in reversed(range(len(deltas))):
            D = deltas[j]
            if D.dim == 0 or D.dim > N.dim or any(a > b for a, b in zip(D.dim_vector(), dv)):
                continue
            X = _surjection(N, D, rng)
            if X is None:
                continue
            K = la.kernel(X)
            Kmod, _ = submodule(N, K) if K.ncols() else (None, None)
            rest = [] if Kmod is None else rec(Kmod)
            if rest is not None:
                return [j] + rest
        failed.append(N)
        return None

    return rec(M)


@dataclass
class QHReport:
    quasi_hereditary: bool
    end_dims: list
    filtrations: list
    delta_dims: list
    failures: list = field(default_factory=list)


def check_quasi_hereditary(A: FinDimAlgebra, order: SimpleOrder, rng=None) -> QHReport:
    deltas = standard_modules(A, order)
    end_dims = [len(hom_space(D, D)) for D in deltas]
    failures = []
    for c, d in enumerate(end_dims):
        if d != 1:
            failures.append(f"End(Delta{c + 1}) has dimension {d}")
    filts = []
    for c, cls in enumerate(A.iso_classes()):
        f = delta_filtration(projective(A, cls[0]), deltas, rng)
        filts.append(f)
        if f is None:
            failures.append(f"P{c + 1} has no Delta-filtration")
    return QHReport(not failures, end_dims, filts, [D.dim for D in deltas], failures)


# ----------------------------------------------------------------------------
# exact Borel subalgebras

@dataclass
class BorelReport:
    exact: bool
    simples_to_standards: bool
    matching: list | None
    directed: bool
    normal: str                   # "true" | "undetermined"
    normal_witness: object
    regular: bool | None
    regular_degrees: dict
    strong: bool
    basic: bool
    notes: list = field(default_factory=list)

    @property
    def is_exact_borel(self) -> bool:
        return self.exact and self.simples_to_standards and self.directed

    def as_dict(self):
        return {
            "exact": self.exact,
            "simples_to_standards": self.simples_to_standards,
            "matching": None if self.matching is None else [m + 1 for m in self.matching],
            "directed": self.directed,
            "normal": self.normal,
            "regular": self.regular,
            "regular_degrees": {str(k): list(v) for k, v in self.regular_degrees.items()},
            "strong": self.strong,
            "basic": self.basic,
            "notes": list(self.notes),
        }


def match_modules(mods, targets, rng=None):
    """Bijection i -> j with mods[i] iso targets[j], or None."""
    rng = rng or random.Random(0)
    cand = []
    for M in mods:
        row = [j for j, N in enumerate(targets) if isomorphism_status(M, N, rng)[0] == "iso"]
        cand.append(row)
    g = nx.Graph()
    left = [("m", i) for i in range(len(mods))]
    g.add_nodes_from(left)
    g.add_nodes_from(("t", j) for j in range(len(targets)))
    for i, row in enumerate(cand):
        for j in row:
            g.add_edge(("m", i), ("t", j))
    match = nx.bipartite.maximum_matching(g, top_nodes=left)
    if len(mods) != len(targets) or any(("m", i) not in match for i in range(len(mods))):
        return None
    return [match[("m", i)][1] for i in range(len(mods))]


def ext_quiver_arrows(B: FinDimAlgebra):
    """(s, t, multiplicity) for arrows s -> t, i.e. dim e_t (rad/rad^2) e_s."""
    n = B.n_vertices
    out = {}
    for g in B.generators()[n:]:
        tags = {B.tags[k] for k, c in enumerate(g) if c != 0}
        (t, s), = tags
        out[(s, t)] = out.get((s, t), 0) + 1
    return [(s, t, m) for (s, t), m in sorted(out.items())]


def is_directed(B: FinDimAlgebra) -> bool:
    g = nx.DiGraph()
    g.add_nodes_from(range(B.n_vertices))
    for s, t, _ in ext_quiver_arrows(B):
        if s == t:
            return False
        g.add_edge(s, t)
    return nx.is_directed_acyclic_graph(g)


def _is_right_ideal(A: FinDimAlgebra, K):
    if K.ncols() == 0:
        return True
    R = A.right_mats()
    return all(la.span_contains(K, r * K) for r in R)


def normal_splitting(emb: SubalgebraEmbedding, rng=None, tries: int = 64):
    """A right ideal K of A with A = iota(B) + K (direct), or None.

    Candidates are sums of principal right ideals b_k A of basis vectors,
    built greedily in the natural, reversed and several shuffled orders.
    """
    rng = rng or random.Random(0)
    A = emb.amb
    F = A.field
    I = emb.image_basis()
    d = A.dim - I.ncols()
    # principal right ideals b_k A of the basis vectors
    principal = [la.column_space(A.left_matrix(A.basis(k))) for k in range(A.dim)]

    orders = [list(range(A.dim)), list(reversed(range(A.dim)))]
    for _ in range(tries):
        o = list(range(A.dim))
        rng.shuffle(o)
        orders.append(o)
    for o in orders:
        K = F.zeros(A.dim, 0)
        for k in o:
            if K.ncols() == d:
                break
            cand = la.column_space(la.hstack([K, principal[k]]))
            if cand.ncols() > d or cand.ncols() == K.ncols():
                continue
            if la.rank(la.hstack([cand, I])) == cand.ncols() + I.ncols():
                K = cand
        if K.ncols() == d and la.rank(la.hstack([K, I])) == A.dim:
            return K
    return None


def _comparison_ranks(emb: SubalgebraEmbedding, cap: int):
    """{n: (dim Ext^n_B(L,L), dim Ext^n_A(A(x)L, A(x)L), rank of the comparison)}."""
    from .endcomplex import Contraction, DGEnd, InducedDGMap, Inducer, ProjComplex
    from .modules import minimal_projective_resolution
    from . import sparse as sp
    B = emb.sub
    LB = simple_modules(B)
    CB = DGEnd([ProjComplex.from_resolution(minimal_projective_resolution(L)) for L in LB])
    T = InducedDGMap(Inducer(emb), CB)
    KB, KA = Contraction(CB), Contraction(T.CA)
    out = {}
    for n in range(1, cap + 1):
        src = [k for k, hb in enumerate(KB.h_basis) if hb[2] == n]
        tgt = [k for k, hb in enumerate(KA.h_basis) if hb[2] == n]
        pos = {k: r for r, k in enumerate(tgt)}
        F = B.field
        M = F.zeros(len(tgt), len(src))
        for c, k in enumerate(src):
            img = KA.p_vec(T(KB.i(k)))
            for r, x in img.items():
                M[pos[r], c] = x
        out[n] = (len(src), len(tgt), la.rank(M) if M.nrows() and M.ncols() else 0)
    return out


def verify_exact_borel(A: FinDimAlgebra, order: SimpleOrder, emb: SubalgebraEmbedding,
                       regular_cap: int = 4, rng=None) -> BorelReport:
    rng = rng or random.Random(0)
    B = emb.sub
    notes = []
    basic = B.is_basic()
    if not basic:
        notes.append("subalgebra is not basic; regularity comparison skipped")
    exact = is_induction_exact(emb)
    deltas = standard_modules(A, order)
    LB = simple_modules(B)
    induced = [induce(emb, L) for L in LB]
    matching = match_modules(induced, deltas, rng)
    s2s = matching is not None
    directed = is_directed(B)
    if directed and s2s:
        for s, t, _ in ext_quiver_arrows(B):
            if not order.less(matching[s], matching[t]):
                directed = False
                notes.append(f"arrow {s + 1}->{t + 1} of the subalgebra is not increasing in the order")
    K = normal_splitting(emb, rng)
    normal = "true" if K is not None else "undetermined"
    regular, degrees = None, {}
    if basic and exact:
        degrees = _comparison_ranks(emb, regular_cap)
        regular = all(a == b == r for a, b, r in degrees.values())
    strong = A.is_basic() and basic and B.n_vertices == A.n_vertices and exact
    if strong:
        from .endcomplex import Inducer
        strong = all(len(P.summands) == 1 for P, _, _ in Inducer(emb).covers)
    return BorelReport(exact, s2s, matching, directed, normal, K, regular, degrees, strong, basic, notes)


def right_radical_product_in_radical(emb: SubalgebraEmbedding) -> bool:
    """A rad(B) is contained in rad(A)."""
    A, B = emb.amb, emb.sub
    radA = A.radical()
    radB = B.radical()
    for c in range(radB.ncols()):
        x = emb(la.col(radB, c))
        R = A.right_matrix(x)
        if not la.span_contains(radA, R):
            return False
    return True


def check_strong_lemmas(A: FinDimAlgebra, emb: SubalgebraEmbedding, modules=None, strong=None, rng=None):
    """Top multiplicities of induced modules against those of the modules, and
    A rad(B) in rad(A) when strong.  Returns a dict of findings.

    Each simple L_i of B is sent to Top(A (x) L_i); for strong B that is L_i^A.
    Right exactness of A (x) - gives the inequality in general.
    """
    from .endcomplex import Inducer
    from .modules import projective as proj_B, regular_module
    B = emb.sub
    if strong is None:
        strong = A.is_basic() and all(len(P.summands) == 1 for P, _, _ in Inducer(emb).covers)
    if modules is None:
        modules = simple_modules(B) + [proj_B(B, v) for v in range(B.n_vertices)] + [regular_module(B)]
    simple_tops = [top_multiplicities(induce(emb, L)) for L in simple_modules(B)]
    rows = []
    ok_ineq, ok_eq = True, True
    for M in modules:
        topM = top_multiplicities(M)
        topI = top_multiplicities(induce(emb, M))
        expected = [0] * len(topI)
        for i, m in enumerate(topM):
            for c, t in enumerate(simple_tops[i]):
                expected[c] += m * t
        ok_ineq &= all(a >= b for a, b in zip(topI, expected))
        ok_eq &= topI == expected
        rows.append((M.name, topM, topI))
    out = {"inequality": ok_ineq, "equality": ok_eq, "strong": strong, "rows": rows}
    if strong:
        out["radical_inclusion"] = right_radical_product_in_radical(emb)
    return out
