"""Twisted modules (X, w) over A-infinity algebras and over End dg algebras.

X is a dimension vector over the objects (idempotents of L); w is a dict
{degree-1 basis index a: matrix X_{src(a)} -> X_{tgt(a)}}, i.e. the element
sum_a a (x) M_a.  Over a DGEnd the realization is H^0 of the total complex
(Q_1 (x) X_1 + ... , d (x) 1 + w).
"""
from __future__ import annotations

import random

from . import linalg as la
from .ainfty import AInftyError, CapTooSmall, DGAlgebraView, _bar_sign
from .modules import Representation, _left_inverse, quotient, submodule, zero_module


class TwistError(AInftyError):
    pass


class TwistedModule:
    def __init__(self, base, dims, w=None, name: str = ""):
        self.base = base
        self.field = base.field
        self.dims = list(dims)
        if len(self.dims) != base.n_obj:
            raise TwistError("dimension vector does not match the number of objects")
        self.w = {}
        for a, M in (w or {}).items():
            if base.deg[a] != 1:
                raise TwistError(f"w has a component of degree {base.deg[a]}")
            if la.shape(M) != (self.dims[base.tgt[a]], self.dims[base.src[a]]):
                raise TwistError("w component has the wrong shape")
            if not la.is_zero(M):
                self.w[a] = M
        self.name = name

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def offsets(self):
        out, off = [], 0
        for d in self.dims:
            out.append(off)
            off += d
        return out

    def total_matrix(self, a):
        """M_a as an endomorphism of X = X_1 + ... + X_N."""
        F = self.field
        off = self.offsets()
        T = F.zeros(self.total_dim, self.total_dim)
        M = self.w.get(a)
        if M is None:
            return T
        s, t = self.base.src[a], self.base.tgt[a]
        for r in range(M.nrows()):
            for c in range(M.ncols()):
                if M[r, c] != 0:
                    T[off[t] + r, off[s] + c] = M[r, c]
        return T

    def __repr__(self):
        return f"TwistedModule({self.name or '?'}, dims={self.dims}, |w|={len(self.w)})"


def simple_twisted(base, i: int, name: str = "") -> TwistedModule:
    dims = [0] * base.n_obj
    dims[i] = 1
    return TwistedModule(base, dims, {}, name or f"L{i + 1}")


def zero_twisted(base) -> TwistedModule:
    return TwistedModule(base, [0] * base.n_obj, {}, "0")


# ----------------------------------------------------------------------------
# words in w

def words(T: TwistedModule, limit: int | None = None):
    """All composable sequences (a_1, ..., a_n) of w-components with nonzero
    product M_{a_1} ... M_{a_n}, with that product."""
    B = T.base
    limit = limit if limit is not None else T.total_dim + 1
    by_tgt = {}
    for a in T.w:
        by_tgt.setdefault(B.tgt[a], []).append(a)
    level = [((a,), M) for a, M in T.w.items()]
    out = []
    n = 1
    while level:
        if n > limit:
            raise TwistError("w is not triangular")
        out.extend(level)
        nxt = []
        for tup, M in level:
            for b in by_tgt.get(B.src[tup[-1]], []):
                P = M * T.w[b]
                if not la.is_zero(P):
                    nxt.append((tup + (b,), P))
        level = nxt
        n += 1
    return out


def is_triangular(T: TwistedModule) -> bool:
    """The chain Y_0 = X, Y_{k+1} = sum_a M_a(Y_k) reaches 0."""
    F = T.field
    n = T.total_dim
    if n == 0 or not T.w:
        return True
    mats = [T.total_matrix(a) for a in T.w]
    Y = F.identity(n)
    for _ in range(n + 1):
        Y = la.column_space(la.hstack([M * Y for M in mats]))
        if Y.ncols() == 0:
            return True
    return False


def mc_defect(T: TwistedModule) -> dict:
    """sum_n m_n(w, ..., w) as {basis index: matrix}; zero entries dropped."""
    if not is_triangular(T):
        raise TwistError("w is not triangular")
    B = T.base
    out = {}
    for tup, M in words(T):
        vec = B.m(len(tup), tup)
        if not vec:
            continue
        sign = _bar_sign([1] * len(tup))
        for c, x in vec.items():
            term = (sign * x) * M
            out[c] = out[c] + term if c in out else term
    return {c: M for c, M in out.items() if not la.is_zero(M)}


def is_maurer_cartan(T: TwistedModule) -> bool:
    return not mc_defect(T)


# ----------------------------------------------------------------------------
# the twisted Hom complex

def _word_tables(T: TwistedModule):
    """Words grouped for insertion: left words by the source of their last
    letter, right words by the target of their first letter (empty word
    included as None)."""
    B = T.base
    ws = words(T)
    left, right = {}, {}
    for tup, M in ws:
        left.setdefault(B.src[tup[-1]], []).append((tup, M))
        right.setdefault(B.tgt[tup[0]], []).append((tup, M))
    return left, right


def _hom_basis(T1: TwistedModule, T2: TwistedModule, n: int):
    B = T1.base
    out = []
    for a in range(B.dim):
        if B.deg[a] != n:
            continue
        rows, cols = T2.dims[B.tgt[a]], T1.dims[B.src[a]]
        for r in range(rows):
            for c in range(cols):
                out.append((a, r, c))
    return out


def hom_differential(T1: TwistedModule, T2: TwistedModule, n: int):
    """Matrix of m_1^tw: Hom^n((X,w), (Y,w')) -> Hom^{n+1}, with the bases."""
    if T1.base is not T2.base:
        raise TwistError("twisted modules over different bases")
    B = T1.base
    F = T1.field
    src_basis = _hom_basis(T1, T2, n)
    tgt_basis = _hom_basis(T1, T2, n + 1)
    pos = {b: r for r, b in enumerate(tgt_basis)}
    D = F.zeros(len(tgt_basis), len(src_basis))
    left, _ = _word_tables(T2)
    _, right = _word_tables(T1)
    cols_of = {}
    for c, (a, r, s) in enumerate(src_basis):
        cols_of.setdefault(a, []).append((c, r, s))
    for a, entries in cols_of.items():
        lws = [((), None)] + left.get(B.tgt[a], [])
        rws = [((), None)] + right.get(B.src[a], [])
        for ltup, ML in lws:
            for rtup, MR in rws:
                tup = ltup + (a,) + rtup
                vec = B.m(len(tup), tup)
                if not vec:
                    continue
                sign = _bar_sign([1] * len(ltup) + [n] + [1] * len(rtup))
                for c_out, x in vec.items():
                    coef = sign * x
                    rows_out = T2.dims[B.tgt[c_out]]
                    cols_out = T1.dims[B.src[c_out]]
                    for col, r, s in entries:
                        # output matrix ML E_{rs} MR
                        lcol = [(i, ML[i, r]) for i in range(rows_out)] if ML is not None else [(r, F.one)]
                        rrow = [(j, MR[s, j]) for j in range(cols_out)] if MR is not None else [(s, F.one)]
                        for i, u in lcol:
                            if u == 0:
                                continue
                            for j, v in rrow:
                                if v != 0:
                                    D[pos[(c_out, i, j)], col] += coef * u * v
    return D, src_basis, tgt_basis


def h0_hom(T1: TwistedModule, T2: TwistedModule):
    """Representatives of H^0 of the twisted Hom complex, as {basis index: matrix}."""
    F = T1.field
    D0, b0, _ = hom_differential(T1, T2, 0)
    Dm, _, _ = hom_differential(T1, T2, -1)
    if not b0:
        return []
    Z = la.kernel(D0) if D0.nrows() else F.identity(len(b0))
    Bd = la.column_space(Dm) if Dm.ncols() else F.zeros(len(b0), 0)
    H = la.complement(Bd, Z)
    B = T1.base
    reps = []
    for c in range(H.ncols()):
        rep = {}
        for r, (a, i, j) in enumerate(b0):
            x = H[r, c]
            if x != 0:
                if a not in rep:
                    rep[a] = F.zeros(T2.dims[B.tgt[a]], T1.dims[B.src[a]])
                rep[a][i, j] = x
        reps.append(rep)
    return reps


def h0_hom_dim(T1: TwistedModule, T2: TwistedModule) -> int:
    return len(h0_hom(T1, T2))


# ----------------------------------------------------------------------------
# functoriality along A-infinity morphisms

def twmod_apply(f, T: TwistedModule, name: str = "") -> TwistedModule:
    """(X, w) -> (X, sum_n f_n(w, ..., w))."""
    if T.base is not f.source:
        raise TwistError("twisted module is not over the source of the morphism")
    tgt = f.target
    out = {}
    for tup, M in words(T):
        n = len(tup)
        if n > f.cap and f.func is None:
            raise CapTooSmall(f"twisted module needs f_{n}; the morphism stops at arity {f.cap}")
        vec = f.f(n, tup)
        for c, x in vec.items():
            term = x * M
            out[c] = out[c] + term if c in out else term
    R = TwistedModule(tgt, T.dims, out, name or T.name)
    if mc_defect(R):
        raise TwistError("pushed twist violates the Maurer-Cartan equation")
    return R


def twist_of_extension(T1: TwistedModule, T2: TwistedModule, cross: dict, name: str = "") -> TwistedModule:
    """(X' + X'', [[w', cross], [0, w'']]) with cross components X''_{src} -> X'_{tgt}.

    Realizes to an extension of realize(T2) by realize(T1).
    """
    B = T1.base
    F = T1.field
    dims = [a + b for a, b in zip(T1.dims, T2.dims)]
    keys = set(T1.w) | set(T2.w) | set(cross)
    w = {}
    for a in keys:
        s, t = B.src[a], B.tgt[a]
        M = F.zeros(dims[t], dims[s])
        for part, (ro, co) in ((T1.w.get(a), (0, 0)), (T2.w.get(a), (T1.dims[t], T1.dims[s])),
                               (cross.get(a), (0, T1.dims[s]))):
            if part is None:
                continue
            for r in range(part.nrows()):
                for c in range(part.ncols()):
                    if part[r, c] != 0:
                        M[ro + r, co + c] = part[r, c]
        w[a] = M
    return TwistedModule(B, dims, w, name)


def random_twisted_module(base, rng: random.Random, objects, density: float = 0.7,
                          tries: int = 8, name: str = "") -> TwistedModule:
    """A Maurer-Cartan twist on L_{o_1} + ... + L_{o_r}, triangular along the list.

    Built by successive extensions with random degree-1 cross terms; a cross
    term breaking the Maurer-Cartan equation is resampled, and dropped after
    ``tries`` failures.
    """
    F = base.field
    deg1 = [a for a in range(base.dim) if base.deg[a] == 1]
    T = zero_twisted(base)
    for o in objects:
        S = simple_twisted(base, o)
        choice = None
        for _ in range(tries):
            cross = {}
            for a in deg1:
                if base.src[a] != o or T.dims[base.tgt[a]] == 0:
                    continue
                M = F.zeros(T.dims[base.tgt[a]], 1)
                for r in range(M.nrows()):
                    if rng.random() < density:
                        M[r, 0] = F.random_scalar(rng, -3, 3)
                cross[a] = M
            cand = twist_of_extension(T, S, cross)
            if not mc_defect(cand):
                choice = cand
                break
        T = choice if choice is not None else twist_of_extension(T, S, {})
    T.name = name or "tw[" + ",".join(str(o + 1) for o in objects) + "]"
    return T


def random_rank2_twist(base, rng: random.Random, name: str = "") -> TwistedModule | None:
    """A non-split two-step twist L_t + L_s glued along a random degree-1 element s -> t."""
    F = base.field
    deg1 = [a for a in range(base.dim) if base.deg[a] == 1 and base.src[a] != base.tgt[a]]
    rng.shuffle(deg1)
    for a in deg1:
        s, t = base.src[a], base.tgt[a]
        cross = {b: F.zeros(1, 1) for b in deg1 if base.src[b] == s and base.tgt[b] == t}
        for b in cross:
            cross[b][0, 0] = F.random_scalar(rng, -3, 3)
        cross[a][0, 0] = F(rng.choice([1, -1, 2]))
        T = twist_of_extension(simple_twisted(base, t), simple_twisted(base, s), cross,
                               name or f"tw[{t + 1},{s + 1}]")
        if not mc_defect(T):
            return T
    return None


# ----------------------------------------------------------------------------
# realization over End dg algebras

def _dg_base(T: TwistedModule):
    if not isinstance(T.base, DGAlgebraView):
        raise TwistError("realization needs a twisted module over an End dg algebra")
    return T.base.C


def total_complex(T: TwistedModule):
    """Degrees, block layout and differentials of (Q (x) X, d (x) 1 + w)."""
    C = _dg_base(T)
    F = T.field
    degs = sorted({k for Q in C.complexes for k in Q.degrees()})
    layout = {}
    for k in degs:
        blocks, off = [], 0
        for i, Q in enumerate(C.complexes):
            P = Q.mods.get(k)
            size = P.dim * T.dims[i] if P is not None else 0
            blocks.append((off, size))
            off += size
        layout[k] = (blocks, off)
    diffs = {}
    for k in degs:
        if k + 1 not in layout:
            continue
        (sb, sdim), (tb, tdim) = layout[k], layout[k + 1]
        D = F.zeros(tdim, sdim)

        def put(M, ro, co):
            for r in range(M.nrows()):
                for c in range(M.ncols()):
                    if M[r, c] != 0:
                        D[ro + r, co + c] += M[r, c]

        for i, Q in enumerate(C.complexes):
            d = Q.d(k)
            if d is not None and T.dims[i]:
                put(la.kron(d, F.identity(T.dims[i])), tb[i][0], sb[i][0])
        for a, M in T.w.items():
            s, t = C.src[a], C.tgt[a]
            comp = C.component_matrix({a: F.one}, k)
            if comp is not None:
                put(la.kron(comp, M), tb[t][0], sb[s][0])
        diffs[k] = D
    return degs, layout, diffs


class Realization:
    """H^0 of a twisted total complex with the data needed to transport maps."""

    def __init__(self, T, module, total, incl, proj):
        self.twisted = T
        self.module = module
        self.total = total
        self.incl = incl
        self.proj = proj


def realize_data(T: TwistedModule, transfer=None, name: str = "") -> Realization:
    if not isinstance(T.base, DGAlgebraView):
        if transfer is None or T.base is not transfer.model:
            raise TwistError("a twist over a minimal model needs its transfer data")
        T = twmod_apply(transfer.i_inf, T)
    C = _dg_base(T)
    A = C.algebra
    F = T.field
    name = name or f"C({T.name})"
    degs, layout, diffs = total_complex(T)
    for k in degs:
        if k in diffs and k + 1 in diffs and not la.is_zero(diffs[k + 1] * diffs[k]):
            raise TwistError("total differential does not square to zero")
    if 0 not in layout or layout[0][1] == 0:
        Z = zero_module(A)
        return Realization(T, Z, Z, F.zeros(0, 0), F.zeros(0, 0))
    blocks, dim0 = layout[0]
    action, verts = [], []
    parts = []
    for i, Q in enumerate(C.complexes):
        P = Q.mods.get(0)
        if P is None or T.dims[i] == 0:
            continue
        parts.append((P, T.dims[i]))
        for v in P.vertex:
            verts.extend([v] * T.dims[i])
    for b in range(A.dim):
        action.append(la.block_diag([la.kron(P.action[b], F.identity(m)) for P, m in parts]))
    tot = Representation(A, action, verts, "total")
    D0 = diffs.get(0)
    Z = la.kernel(D0) if D0 is not None else F.identity(dim0)
    if Z.ncols() == 0:
        return Realization(T, zero_module(A), tot, F.zeros(dim0, 0), F.zeros(0, 0))
    Zmod, incl = submodule(tot, Z)
    Dm = diffs.get(-1)
    if Dm is None or Dm.ncols() == 0:
        Bz = F.zeros(Zmod.dim, 0)
    else:
        Bz = _left_inverse(incl) * la.column_space(Dm)
    H, proj = quotient(Zmod, Bz, name)
    H.name = name
    return Realization(T, H, tot, incl, proj)


def realize(T: TwistedModule, transfer=None, name: str = "") -> Representation:
    """H^0 of the twisted total complex, as a module over the base algebra.

    A twist over a minimal model is first pushed along ``transfer.i_inf``.
    """
    return realize_data(T, transfer, name).module


def realize_map(R1: Realization, R2: Realization, blocks) -> "la.Matrix":
    """H^0 of id (x) phi for phi = (phi_i: X_i -> Y_i) commuting with every word of w.

    Unit-type degree-0 morphisms 1 (x) phi stay strict under pushforward along
    strictly unital maps, so the same blocks serve over minimal models.
    """
    T1, T2 = R1.twisted, R2.twisted
    C = _dg_base(T1)
    F = T1.field
    if R1.module.dim == 0 or R2.module.dim == 0:
        return F.zeros(R2.module.dim, R1.module.dim)
    mats = []
    for i, Q in enumerate(C.complexes):
        P = Q.mods.get(0)
        if P is None:
            continue
        if T1.dims[i] == 0 and T2.dims[i] == 0:
            continue
        mats.append(la.kron(F.identity(P.dim), blocks[i]) if blocks[i].nrows() * blocks[i].ncols()
                    else F.zeros(P.dim * T2.dims[i], P.dim * T1.dims[i]))
    Phi = _block_diag_rect(F, mats)
    section = _left_inverse(R1.proj.transpose()).transpose()
    return R2.proj * _left_inverse(R2.incl) * Phi * R1.incl * section


def _block_diag_rect(F, mats):
    R = sum(m.nrows() for m in mats)
    Cn = sum(m.ncols() for m in mats)
    out = F.zeros(R, Cn)
    ro = co = 0
    for m in mats:
        for r in range(m.nrows()):
            for c in range(m.ncols()):
                if m[r, c] != 0:
                    out[ro + r, co + c] = m[r, c]
        ro += m.nrows()
        co += m.ncols()
    return out
