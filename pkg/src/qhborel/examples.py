"""Concrete algebras: the Auslander family with its Borel pair, the two-source
example with its involution, and a small induction counterexample."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg as la
from .algebra import (
    FinDimAlgebra,
    Quiver,
    SubalgebraEmbedding,
    build_path_algebra,
    embedding_from_generators,
    path_element,
    projective_endomorphism_algebra,
)
from .linalg import Field
from .qh import SimpleOrder


# ----------------------------------------------------------------------------
# generic helpers

def auslander_quiver(n: int) -> Quiver:
    arrows = [(i, i + 1, f"x{i}") for i in range(1, n)]
    arrows += [(i, i - 1, f"y{i}") for i in range(2, n + 1)]
    return Quiver(n, tuple(arrows))


def auslander_relations(q: Quiver, n: int):
    rels = []
    for i in range(2, n):
        rels.append([(1, q.path_from_names([f"y{i + 1}", f"x{i}"])),
                     (-1, q.path_from_names([f"x{i - 1}", f"y{i}"]))])
    if n >= 2:
        rels.append([(1, q.path_from_names([f"x{n - 1}", f"y{n}"]))])
    return rels


def auslander_algebra(n: int, field: Field | None = None) -> FinDimAlgebra:
    """Auslander algebra of k[x]/x^n: x_i: i -> i+1, y_{i+1}: i+1 -> i."""
    q = auslander_quiver(n)
    return build_path_algebra(q, auslander_relations(q, n), field or Field())


def full_dag_quiver(n: int) -> Quiver:
    return Quiver(n, tuple((i, j, f"a{i}_{j}") for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def full_dag_algebra(n: int, field: Field | None = None) -> FinDimAlgebra:
    return build_path_algebra(full_dag_quiver(n), [], field or Field())


def path_counts(A: FinDimAlgebra, k: int):
    """Number of occurrences of each arrow name in the path basis element k."""
    t, s, arr = A.paths[k]
    out = {}
    for a in arr:
        name = A.quiver.arrows[a][2]
        out[name] = out.get(name, 0) + 1
    return out


def r_element(R: FinDimAlgebra, s: int, t: int, b) -> list:
    """The R-element x -> x b from summand s to summand t (b in e_{v_s} A e_{v_t})."""
    x = R.zero()
    for k, c in enumerate(b):
        if c != 0:
            x[R.proj_index[(s, t, k)]] += c
    return x


def diagonal_action_matrix(A: FinDimAlgebra, scalars) -> "la.Matrix":
    """Automorphism matrix that scales basis vector k by scalars[k]."""
    F = A.field
    M = F.zeros(A.dim, A.dim)
    for k, c in enumerate(scalars):
        M[k, k] = F(c) if isinstance(c, int) else c
    return M


def primitive_root(F: Field, N: int):
    """A primitive N-th root of unity in the field (None if there is none)."""
    if N == 1:
        return F.one
    if F.p == 0:
        if N == 2:
            return F(-1)
        return None
    p = F.p
    if (p - 1) % N:
        return None
    primes = [q for q in range(2, N + 1) if N % q == 0 and all(q % r for r in range(2, q))]
    for g in range(2, p):
        z = pow(g, (p - 1) // N, p)
        if all(pow(z, N // q, p) != 1 for q in primes):
            return F(z)
    return None


def field_with_roots(N: int, lower: int = 100) -> Field:
    """Smallest prime field F_p with p = 1 mod N and p > lower."""
    p = lower + 1
    while True:
        if all(p % d for d in range(2, int(p ** 0.5) + 1)) and (p - 1) % N == 0:
            return Field(p)
        p += 1


# ----------------------------------------------------------------------------
# the Auslander family

def fenwick_index_set(n: int):
    """All alpha in {0,1}^n with alpha_n = 1, ordered by first nonzero entry then lexicographically (descending)."""
    out = [a for a in itertools.product((0, 1), repeat=n) if a[-1] == 1]
    return sorted(out, key=lambda a: (first_one(a), tuple(-x for x in a)))


def first_one(alpha) -> int:
    """s(alpha), 1-based."""
    return next(k + 1 for k, x in enumerate(alpha) if x == 1)


def j_of(alpha) -> int:
    """One more than the position of the last zero (1 if there is none)."""
    zeros = [k + 1 for k, x in enumerate(alpha) if x == 0]
    return (max(zeros) if zeros else 0) + 1


def n_of(alpha) -> int:
    """Number of zeros at or after the first one."""
    s = first_one(alpha)
    return sum(1 for k in range(s, len(alpha) + 1) if alpha[k - 1] == 0)


def alpha_str(alpha) -> str:
    return "".join(str(x) for x in alpha)


@dataclass
class FenwickData:
    n: int
    I: list
    I_sets: dict            # i -> list of alpha
    j: dict                 # alpha -> j(alpha)
    n_zeros: dict           # alpha -> n(alpha)
    Q: dict                 # i -> list of A-vertices (1-based) of the summands of Q_i

    def dim_R(self) -> int:
        js = [self.j[a] for a in self.I]
        return sum(self.n - max(a, b) + 1 for a in js for b in js)

    def multiplicities(self, i: int):
        out = {}
        for v in self.Q[i]:
            out[v] = out.get(v, 0) + 1
        return out


def fenwick_projectives(n: int) -> FenwickData:
    I = fenwick_index_set(n)
    I_sets = {i: [a for a in I if first_one(a) == i] for i in range(1, n + 1)}
    j = {a: j_of(a) for a in I}
    nz = {a: n_of(a) for a in I}
    Q = {i: [j[a] for a in I_sets[i]] for i in range(1, n + 1)}
    return FenwickData(n, I, I_sets, j, nz, Q)


def _vertical_path(A: FinDimAlgebra, frm: int, to: int):
    """The x-path (up) or y-path (down) from vertex frm to vertex to (1-based)."""
    if frm == to:
        return path_element(A, [f"e{frm}"])
    if to > frm:
        names = [f"x{k}" for k in range(to - 1, frm - 1, -1)]
    else:
        names = [f"y{k}" for k in range(to + 1, frm + 1)]
    return path_element(A, names)


@dataclass
class AuslanderExample:
    n: int
    field: Field
    A: FinDimAlgebra
    order: SimpleOrder
    fenwick: FenwickData
    R: FinDimAlgebra
    order_R: SimpleOrder
    B: FinDimAlgebra
    iota: SubalgebraEmbedding
    summands: list          # alpha per R-vertex
    xi: object = None
    action_A: object = None  # automorphism matrices (one generator)
    action_R: object = None
    action_B: object = None
    N: int | None = None


def _r(A, R, summ_index, alpha, beta, a, b):
    """r_{alpha,beta,a,b}: right multiplication by the vertical path from j(beta) to j(alpha).

    The indices a, b are only used to choose the direction; the path is the
    one whose endpoints are j(beta) and j(alpha).
    """
    ja, jb = j_of(alpha), j_of(beta)
    if abs(ja - jb) != abs(b - a) or min(a, b) != 0:
        raise ValueError("r-element with inconsistent step counts")
    p = _vertical_path(A, jb, ja)
    return r_element(R, summ_index[alpha], summ_index[beta], p)


def example_auslander(n: int, field: Field | None = None, N: int | None = None) -> AuslanderExample:
    """The Auslander algebra of k[x]/x^n with its regular exact Borel pair (R, B).

    With N given, the field must contain a primitive N-th root of unity xi and
    the cyclic group of order N acts by x -> x, y -> xi y on A, by the twisted
    action on R and by (i, j) -> xi^{i+1-j} (i, j) on B.
    """
    F = field or (field_with_roots(N) if N and N > 2 else Field())
    A = auslander_algebra(n, F)
    fw = fenwick_projectives(n)
    summands = list(fw.I)
    summ_index = {a: k for k, a in enumerate(summands)}
    R = projective_endomorphism_algebra(A, [fw.j[a] - 1 for a in summands],
                                        [f"P[{alpha_str(a)}]" for a in summands])
    B = full_dag_algebra(n, F)

    def eps(i):
        return tuple(1 if k == i else 0 for k in range(1, n + 1))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def beta(i):
        return tuple(1 if k >= i else 0 for k in range(1, n + 1))

    images = {}
    for i in range(1, n + 1):
        x = R.zero()
        for a in fw.I_sets[i]:
            x = la_add(x, _r(A, R, summ_index, a, a, 0, 0))
        images[f"e{i}"] = x
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            x = R.zero()
            if j > i + 1:
                for a in fw.I_sets[j]:
                    x = la_add(x, _r(A, R, summ_index, a, add(a, eps(i)), 0, 0))
            else:
                x = la_add(x, _r(A, R, summ_index, beta(i + 1), beta(i), 1, 0))
                for k in range(i + 2, n + 1):
                    x = la_add(x, _r(A, R, summ_index, beta(i + 1), add(beta(k), eps(i)), 0, k - i - 1))
                for a in fw.I_sets[i + 1]:
                    if a != beta(i + 1):
                        x = la_add(x, _r(A, R, summ_index, a, add(a, eps(i)), 0, 0))
            images[f"a{i}_{j}"] = x
    iota = embedding_from_generators(B, R, images, name="iota")
    order = SimpleOrder.natural(n)
    order_R = order_on_projective_algebra(R, order)
    ex = AuslanderExample(n, F, A, order, fw, R, order_R, B, iota, summands, N=N)
    if N:
        xi = primitive_root(F, N)
        if xi is None:
            raise ValueError(f"the field has no primitive {N}-th root of unity")
        ex.xi = xi
        ex.action_A = diagonal_action_matrix(A, [_pow(F, xi, _count_prefix(A, k, "y")) for k in range(A.dim)])
        scal = []
        for (s, t, k) in R.proj_basis:
            e = _count_prefix(A, k, "y") - fw.n_zeros[summands[t]] + fw.n_zeros[summands[s]]
            scal.append(_pow(F, xi, e))
        ex.action_R = diagonal_action_matrix(R, scal)
        scal_B = []
        for k in range(B.dim):
            t, s, arr = B.paths[k]
            e = 0
            for a in arr:
                src, tgt, _ = B.quiver.arrows[a]
                e += src + 1 - tgt
            scal_B.append(_pow(F, xi, e))
        ex.action_B = diagonal_action_matrix(B, scal_B)
    return ex


def _count_prefix(A: FinDimAlgebra, k: int, prefix: str) -> int:
    t, s, arr = A.paths[k]
    return sum(1 for a in arr if A.quiver.arrows[a][2].startswith(prefix))


def _pow(F: Field, x, e: int):
    if e >= 0:
        return x ** e
    return (F.one / x) ** (-e)


def la_add(x, y):
    return [a + b for a, b in zip(x, y)]


def order_on_projective_algebra(R: FinDimAlgebra, order: SimpleOrder) -> SimpleOrder:
    """Transport an order on the base algebra's simples to End(P)^op (classes of R)."""
    A = R.base_algebra
    base_class = {}
    for c, cls in enumerate(A.iso_classes()):
        for v in cls:
            base_class[v] = c
    r_class_to_base = []
    for cls in R.iso_classes():
        r_class_to_base.append(base_class[R.proj_vertices[cls[0]]])
    inv = {b: c for c, b in enumerate(r_class_to_base)}
    if len(inv) != len(r_class_to_base):
        raise ValueError("projective generator has repeated classes in distinct R-classes")
    pairs = [(inv[a], inv[b]) for a in range(order.n) for b in range(order.n)
             if order.less(a, b) and a in inv and b in inv]
    return SimpleOrder(len(r_class_to_base), pairs)


# ----------------------------------------------------------------------------
# the two-source example 1 -> 2 <- 3

@dataclass
class TwoSourceExample:
    field: Field
    A: FinDimAlgebra
    order: SimpleOrder
    R: FinDimAlgebra
    order_R: SimpleOrder
    B: FinDimAlgebra
    iota: SubalgebraEmbedding
    action_A: object
    action_R: object
    named: dict = field(default_factory=dict)


def example_two_source(field: Field | None = None) -> TwoSourceExample:
    F = field or Field()
    if F.p == 2:
        raise ValueError("characteristic 2 is excluded")
    q = Quiver(3, ((1, 2, "alpha"), (3, 2, "beta")))
    A = build_path_algebra(q, [], F)
    labels = ["P1", "P3'", "P2", "P3"]
    R = projective_endomorphism_algebra(A, [0, 2, 1, 2], labels)
    S = {lab: k for k, lab in enumerate(labels)}
    al = path_element(A, ["alpha"])
    be = path_element(A, ["beta"])
    e3 = path_element(A, ["e3"])
    named = {
        "id_P1": R.idempotents[S["P1"]], "id_P3'": R.idempotents[S["P3'"]],
        "id_P2": R.idempotents[S["P2"]], "id_P3": R.idempotents[S["P3"]],
        "f21": r_element(R, S["P2"], S["P1"], al),
        "f23": r_element(R, S["P2"], S["P3"], be),
        "f23'": r_element(R, S["P2"], S["P3'"], be),
        "f33'": r_element(R, S["P3"], S["P3'"], e3),
        "f3'3": r_element(R, S["P3'"], S["P3"], e3),
    }
    qb = Quiver(3, ((1, 2, "alpha'"), (1, 3, "beta'")))
    B = build_path_algebra(qb, [], F)
    images = {
        "e1": la_add(named["id_P1"], named["id_P3'"]),
        "e2": named["id_P2"],
        "e3": named["id_P3"],
        "alpha'": la_add(named["f21"], named["f23'"]),
        "beta'": named["f33'"],
    }
    iota = embedding_from_generators(B, R, images, name="iota")
    order = SimpleOrder.natural(3)
    sign_A = [(-1) ** _count_prefix(A, k, "alpha") for k in range(A.dim)]
    sign_R = [(-1) ** _count_prefix(A, k, "alpha") for (s, t, k) in R.proj_basis]
    return TwoSourceExample(F, A, order, R, order_on_projective_algebra(R, order), B, iota,
                            diagonal_action_matrix(A, sign_A), diagonal_action_matrix(R, sign_R), named)


# ----------------------------------------------------------------------------
# the counterexample quiver 1 -> 3 -> 2 with B spanned by the idempotents and alpha

@dataclass
class InductionCounterexample:
    A: FinDimAlgebra
    B: FinDimAlgebra
    iota: SubalgebraEmbedding


def example_counterexample(field: Field | None = None) -> InductionCounterexample:
    F = field or Field()
    q = Quiver(3, ((1, 3, "alpha"), (3, 2, "beta")))
    A = build_path_algebra(q, [], F)
    qb = Quiver(3, ((1, 3, "alpha"),))
    B = build_path_algebra(qb, [], F)
    images = {f"e{i}": path_element(A, [f"e{i}"]) for i in (1, 2, 3)}
    images["alpha"] = path_element(A, ["alpha"])
    return InductionCounterexample(A, B, embedding_from_generators(B, A, images, name="iota"))
