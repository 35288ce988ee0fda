"""The dg algebra End*(Q_1 + ... + Q_N) of bounded complexes of projective
modules, with an L-bimodule contraction onto its cohomology (L = k^N).

A degree-n basis element of Hom(Q_i, Q_j) is a tuple (i, j, n, k, s, q): it
sends the generator of summand s of Q_i^k to basis vector q of Q_j^{k+n}
(q lies in e_v Q_j^{k+n} for the vertex v of the summand) and kills the other
generators.  Composition is ordinary composition; the differential is
d(f) = d f - (-1)^n f d.
"""
from __future__ import annotations

from . import linalg as la
from . import sparse as sp
from .modules import Representation, Resolution, generator_positions


class ProjComplex:
    """Bounded cochain complex of canonical projective modules.

    ``mods[deg]`` is a Representation with summands; ``diffs[deg]`` is the
    matrix of d: mods[deg] -> mods[deg + 1].
    """

    def __init__(self, algebra, mods: dict, diffs: dict, name: str = ""):
        self.algebra = algebra
        self.mods = {k: m for k, m in mods.items() if m.dim > 0}
        self.diffs = {k: d for k, d in diffs.items() if k in self.mods and k + 1 in self.mods}
        self.name = name
        for m in self.mods.values():
            if m.summands is None:
                raise ValueError("ProjComplex needs canonical projective modules")

    @classmethod
    def from_resolution(cls, res: Resolution, name: str = ""):
        mods = {-k: P for k, P in enumerate(res.projs)}
        diffs = {-(k + 1): d for k, d in enumerate(res.dmaps)}
        return cls(res.projs[0].algebra, mods, diffs, name)

    def degrees(self):
        return sorted(self.mods)

    def d(self, deg):
        return self.diffs.get(deg)

    def check(self) -> bool:
        for k in self.degrees():
            d1, d2 = self.d(k), self.d(k + 1)
            if d1 is not None and d2 is not None and not la.is_zero(d2 * d1):
                return False
        return True


def _summand_of_position(P: Representation):
    """position -> (summand index, A-basis index)."""
    out = {}
    for s, (v, off, idx) in enumerate(P.summands):
        for a, k in enumerate(idx):
            out[off + a] = (s, k)
    return out


class DGEnd:
    """End*(Q_1 + ... + Q_N) as a dg algebra with a distinguished basis."""

    def __init__(self, complexes):
        self.complexes = list(complexes)
        self.n_obj = len(self.complexes)
        A = self.complexes[0].algebra
        self.algebra = A
        self.field = A.field
        self.details = []
        self.deg, self.src, self.tgt = [], [], []
        self.blocks = {}
        self._pos = [{k: _summand_of_position(m) for k, m in Q.mods.items()} for Q in self.complexes]
        self._gens = [{k: generator_positions(m) for k, m in Q.mods.items()} for Q in self.complexes]
        for i, Qi in enumerate(self.complexes):
            for j, Qj in enumerate(self.complexes):
                for k in Qi.degrees():
                    Pk = Qi.mods[k]
                    for n in range(min(Qj.degrees()) - k, max(Qj.degrees()) - k + 1):
                        T = Qj.mods.get(k + n)
                        if T is None:
                            continue
                        for s, (v, off, idx) in enumerate(Pk.summands):
                            for q in T.indices(v):
                                self.blocks.setdefault((j, i, n), []).append(len(self.details))
                                self.details.append((i, j, n, k, s, q))
                                self.deg.append(n)
                                self.src.append(i)
                                self.tgt.append(j)
        self.index = {d: x for x, d in enumerate(self.details)}
        self.dim = len(self.details)
        self._mu = {}
        self._d = {}

    def degrees_of_block(self, j, i):
        return sorted(n for (jj, ii, n) in self.blocks if jj == j and ii == i)

    # structure maps on basis elements
    def mu(self, a: int, b: int) -> dict:
        """Basis product a*b = a o b (b first)."""
        key = (a, b)
        if key in self._mu:
            return self._mu[key]
        ja, la_, na, ka, sa, qa = self.details[a]
        ib, jb, nb, kb, sb, qb = self.details[b]
        out = {}
        if jb == ja and ka == kb + nb:
            s_of, pidx = self._pos[jb][ka][qb]
            if s_of == sa:
                T = self.complexes[la_].mods[ka + na]
                colv = T.action[pidx]
                for r in range(T.dim):
                    x = colv[r, qa]
                    if x != 0:
                        out[self.index[(ib, la_, na + nb, kb, sb, r)]] = x
        self._mu[key] = out
        return out

    def d(self, a: int) -> dict:
        if a in self._d:
            return self._d[a]
        i, j, n, k, s, q = self.details[a]
        F = self.field
        out = {}
        Qi, Qj = self.complexes[i], self.complexes[j]
        D = Qj.d(k + n)
        if D is not None:
            for r in range(D.nrows()):
                x = D[r, q]
                if x != 0:
                    sp.add_into(out, {self.index[(i, j, n + 1, k, s, r)]: x})
        Dm = Qi.d(k - 1)
        if Dm is not None:
            sign = -1 if n % 2 == 0 else 1
            P = Qi.mods[k]
            off_s, idx_s = P.summands[s][1], P.summands[s][2]
            T = Qj.mods[k + n]
            for s2, g in enumerate(self._gens[i][k - 1]):
                for a2, pk in enumerate(idx_s):
                    c = Dm[off_s + a2, g]
                    if c == 0:
                        continue
                    colv = T.action[pk]
                    for r in range(T.dim):
                        x = colv[r, q]
                        if x != 0:
                            sp.add_into(out, {self.index[(i, j, n + 1, k - 1, s2, r)]: sign * c * x})
        self._d[a] = out
        return out

    def mu_vec(self, x: dict, y: dict) -> dict:
        return sp.multilinear(lambda t: self.mu(t[0], t[1]), [x, y])

    def d_vec(self, x: dict) -> dict:
        out = {}
        for k, c in x.items():
            sp.add_into(out, self.d(k), c)
        return out

    def unit(self, i: int) -> dict:
        """id of Q_i as a sparse vector."""
        out = {}
        Q = self.complexes[i]
        for k in Q.degrees():
            for s, g in enumerate(self._gens[i][k]):
                out[self.index[(i, i, 0, k, s, g)]] = self.field.one
        return out

    # full matrices
    def component_matrix(self, x: dict, k: int):
        """The component Q_i^k -> Q_j^{k+n} of a homogeneous element as a matrix."""
        F = self.field
        if not x:
            return None
        a0 = next(iter(x))
        i, j, n, _, _, _ = self.details[a0]
        P = self.complexes[i].mods.get(k)
        T = self.complexes[j].mods.get(k + n)
        if P is None or T is None:
            return None
        M = F.zeros(T.dim, P.dim)
        for a, c in x.items():
            ii, jj, nn, kk, s, q = self.details[a]
            if kk != k:
                continue
            v, off, idx = P.summands[s]
            for b, pk in enumerate(idx):
                colv = T.action[pk]
                for r in range(T.dim):
                    val = colv[r, q]
                    if val != 0:
                        M[r, off + b] += c * val
        return M

    def element_from_components(self, i: int, j: int, n: int, comps: dict) -> dict:
        """Sparse vector of the homogeneous map with the given components {k: matrix}."""
        out = {}
        for k, M in comps.items():
            P = self.complexes[i].mods.get(k)
            if P is None or M is None:
                continue
            for s, g in enumerate(self._gens[i][k]):
                for r in range(M.nrows()):
                    x = M[r, g]
                    if x != 0:
                        out[self.index[(i, j, n, k, s, r)]] = x
        return out

    def block_matrix_d(self, j, i, n):
        """Matrix of d: block (j,i,n) -> block (j,i,n+1) in block-local coordinates."""
        F = self.field
        src = self.blocks.get((j, i, n), [])
        tgt = self.blocks.get((j, i, n + 1), [])
        pos = {x: r for r, x in enumerate(tgt)}
        M = F.zeros(len(tgt), len(src))
        for c, a in enumerate(src):
            for b, x in self.d(a).items():
                M[pos[b], c] = x
        return M


class Contraction:
    """L-bimodule contraction (i, p, h) of a DGEnd onto chosen cohomology representatives.

    Satisfies d h + h d = id - i p, h h = 0, h i = 0, p h = 0.  The
    cohomology basis lists, per block (j, i, n), sparse cocycles; the class
    of id_{Q_i} is the first element of block (i, i, 0).
    """

    def __init__(self, C: DGEnd):
        self.C = C
        F = C.field
        self.h_basis = []        # list of (j, i, n, sparse cocycle)
        self.block_H = {}        # (j,i,n) -> list of H indices
        self._p = {}             # C idx -> sparse over H
        self._h = {}             # C idx -> sparse over C
        keys = sorted({(j, i) for (j, i, n) in C.blocks})
        for (j, i) in keys:
            degs = C.degrees_of_block(j, i)
            W_prev = None       # complement of cocycles in degree n-1 (block-local columns)
            prev_src = None
            for n in range(min(degs), max(degs) + 1):
                idx = C.blocks.get((j, i, n), [])
                dim = len(idx)
                Dn = C.block_matrix_d(j, i, n)
                Z = la.kernel(Dn) if dim else F.zeros(0, 0)
                if W_prev is not None and W_prev.ncols() and dim:
                    Bn = C.block_matrix_d(j, i, n - 1) * W_prev
                else:
                    Bn = F.zeros(dim, 0)
                whole = Z
                if j == i and n == 0:
                    u = C.unit(i)
                    ucol = F.column([u.get(a, F.zero) for a in idx])
                    whole = la.hstack([ucol, Z])
                Hn = la.complement(Bn, whole) if dim else F.zeros(0, 0)
                Wn = la.complement(Z, F.identity(dim)) if dim else F.zeros(0, 0)
                hlist = []
                for c in range(Hn.ncols()):
                    vec = {idx[r]: Hn[r, c] for r in range(dim) if Hn[r, c] != 0}
                    hlist.append(len(self.h_basis))
                    self.h_basis.append((j, i, n, vec))
                self.block_H[(j, i, n)] = hlist
                if dim:
                    T = la.hstack([Bn, Hn, Wn])
                    if T.ncols() != dim:
                        raise AssertionError("contraction: decomposition is not complete")
                    Tinv = T.inv()
                    nb, nh = Bn.ncols(), Hn.ncols()
                    for c, a in enumerate(idx):
                        pv = {}
                        for t in range(nh):
                            x = Tinv[nb + t, c]
                            if x != 0:
                                pv[hlist[t]] = x
                        self._p[a] = pv
                        hv = {}
                        if nb:
                            coeffs = [Tinv[t, c] for t in range(nb)]
                            for r in range(W_prev.nrows()):
                                x = sum((W_prev[r, t] * coeffs[t] for t in range(nb) if coeffs[t] != 0), F.zero)
                                if x != 0:
                                    hv[prev_src[r]] = x
                        self._h[a] = hv
                W_prev, prev_src = Wn, idx
        self.dim_H = len(self.h_basis)

    def i(self, hidx: int) -> dict:
        return self.h_basis[hidx][3]

    def p(self, a: int) -> dict:
        return self._p.get(a, {})

    def h(self, a: int) -> dict:
        return self._h.get(a, {})

    def p_vec(self, x: dict) -> dict:
        out = {}
        for a, c in x.items():
            sp.add_into(out, self.p(a), c)
        return out

    def h_vec(self, x: dict) -> dict:
        out = {}
        for a, c in x.items():
            sp.add_into(out, self.h(a), c)
        return out

    def i_vec(self, y: dict) -> dict:
        out = {}
        for b, c in y.items():
            sp.add_into(out, self.i(b), c)
        return out

    def unit_index(self, obj: int) -> int:
        return self.block_H[(obj, obj, 0)][0]


# ----------------------------------------------------------------------------
# the functor A (x)_B - on complexes of projectives

class Inducer:
    """A (x)_B - on canonical projective B-modules, landing in canonical projective A-modules.

    A (x)_B B e_v = A iota(e_v) is identified with a canonical sum of indecomposable
    projectives through a fixed isomorphism c_v (from a projective cover).
    """

    def __init__(self, emb):
        from .modules import projective_cover, submodule, from_action, _left_inverse, projective_sum
        self.emb = emb
        A, B = emb.amb, emb.sub
        self.A, self.B = A, B
        F = A.field
        reg = Representation(A, A.left_mats(), [t for t, s in A.tags], "A")
        self.covers = []
        for v in range(B.n_vertices):
            Re = A.right_matrix(emb(B.idempotents[v]))
            sub_mod, incl = submodule(reg, la.column_space(Re))
            P, pi = projective_cover(sub_mod)
            c = incl * pi                      # P coords -> A coords (image A iota(e_v))
            self.covers.append((P, c, _left_inverse(c)))
        self._projective_sum = projective_sum

    def vertices(self, v):
        return [w for w, _, _ in self.covers[v][0].summands]

    def module(self, P: Representation) -> Representation:
        verts = []
        for v, _, _ in P.summands:
            verts.extend(self.vertices(v))
        return self._projective_sum(self.A, verts)

    def offsets(self, P: Representation):
        out, off = [], 0
        for v, _, _ in P.summands:
            out.append(off)
            off += self.covers[v][0].dim
        return out

    def map(self, P: Representation, Q: Representation, M):
        """Induced A-matrix of the B-map P -> Q with matrix M (P, Q canonical)."""
        A, B = self.A, self.B
        F = A.field
        TP, TQ = self.module(P), self.module(Q)
        offP, offQ = self.offsets(P), self.offsets(Q)
        from .modules import generator_positions
        gens = generator_positions(P)
        out = F.zeros(TQ.dim, TP.dim)
        for s, (v, _, _) in enumerate(P.summands):
            Pv, cv, _ = self.covers[v]
            g = gens[s]
            for t, (w, offw, idxw) in enumerate(Q.summands):
                b = B.zero()
                nz = False
                for a, k in enumerate(idxw):
                    x = M[offw + a, g]
                    if x != 0:
                        b[k] += x
                        nz = True
                if not nz:
                    continue
                Pw, cw, cw_inv = self.covers[w]
                blk = cw_inv * A.right_matrix(self.emb(b)) * cv
                for r in range(blk.nrows()):
                    for c in range(blk.ncols()):
                        x = blk[r, c]
                        if x != 0:
                            out[offQ[t] + r, offP[s] + c] += x
        return out

    def complex(self, Q: ProjComplex, name: str = "") -> ProjComplex:
        mods = {k: self.module(m) for k, m in Q.mods.items()}
        diffs = {k: self.map(Q.mods[k], Q.mods[k + 1], d) for k, d in Q.diffs.items()}
        return ProjComplex(self.A, mods, diffs, name or Q.name)


class InducedDGMap:
    """The strict dg map End*_B(Q) -> End*_A(A (x)_B Q)."""

    def __init__(self, inducer: Inducer, CB: DGEnd):
        self.ind = inducer
        self.CB = CB
        self.CA = DGEnd([inducer.complex(Q) for Q in CB.complexes])
        self._cache = {}

    def basis(self, a: int) -> dict:
        if a in self._cache:
            return self._cache[a]
        CB, CA = self.CB, self.CA
        i, j, n, k, s, q = CB.details[a]
        M = CB.component_matrix({a: CB.field.one}, k)
        Qi, Qj = CB.complexes[i], CB.complexes[j]
        TM = self.ind.map(Qi.mods[k], Qj.mods[k + n], M)
        val = CA.element_from_components(i, j, n, {k: TM})
        self._cache[a] = val
        return val

    def __call__(self, x: dict) -> dict:
        out = {}
        for a, c in x.items():
            sp.add_into(out, self.basis(a), c)
        return out
