"""Left modules over finite-dimensional algebras: Hom spaces, tops,
projective covers, minimal resolutions, induction along an embedding and an
isomorphism test.

Every :class:`Representation` uses a basis adapted to the algebra's
idempotents, recorded in ``vertex``: basis vector k lies in e_{vertex[k]} M.
"""
from __future__ import annotations

import random

from . import linalg as la
from .algebra import AlgebraError, FinDimAlgebra, SubalgebraEmbedding


class Representation:
    """A module given by one action matrix per algebra basis vector."""

    def __init__(self, algebra: FinDimAlgebra, action, vertex, name: str = "", summands=None):
        self.algebra = algebra
        self.field = algebra.field
        self.action = list(action)
        self.vertex = list(vertex)
        self.dim = len(self.vertex)
        self.name = name
        # for canonical sums of indecomposable projectives: list of (vertex, offset, A-indices)
        self.summands = summands

    def act(self, a):
        F = self.field
        m = F.zeros(self.dim, self.dim)
        for k, c in enumerate(a):
            if c != 0:
                m += c * self.action[k]
        return m

    def indices(self, v):
        return [k for k, w in enumerate(self.vertex) if w == v]

    def dim_vector(self):
        return [len(self.indices(v)) for v in range(self.algebra.n_vertices)]

    def check(self) -> bool:
        A = self.algebra
        if not la.equal(self.act(A.unit), self.field.identity(self.dim)):
            return False
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.act(A.mul_basis(i, j))
                if not la.equal(lhs, self.action[i] * self.action[j]):
                    return False
        return True

    def __repr__(self):
        return f"Representation({self.name or '?'}, dim={self.dim}, dimvec={self.dim_vector()})"


class ModuleMap:
    def __init__(self, source: Representation, target: Representation, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def is_homomorphism(self) -> bool:
        A = self.source.algebra
        return all(la.equal(self.matrix * self.source.action[k], self.target.action[k] * self.matrix)
                   for k in range(A.dim))

    def is_iso(self) -> bool:
        return la.is_invertible_matrix(self.matrix)


# ----------------------------------------------------------------------------
# construction helpers

def adapted_basis(M: Representation, space):
    """Basis of an idempotent-stable subspace (columns of ``space``) adapted to vertices.

    Returns (basis matrix in M coordinates, vertex list)."""
    F = M.field
    A = M.algebra
    cols, verts = [], []
    for v in range(A.n_vertices):
        ev = M.act(A.idempotents[v])
        sub = la.column_space(ev * space) if space.ncols() else F.zeros(M.dim, 0)
        for c in range(sub.ncols()):
            cols.append(la.select_columns(sub, [c]))
            verts.append(v)
    if not cols:
        return F.zeros(M.dim, 0), []
    return la.hstack(cols), verts


def submodule(M: Representation, space, name: str = ""):
    """Submodule on an invariant subspace.  Returns (module, inclusion matrix)."""
    B, verts = adapted_basis(M, space)
    F = M.field
    if B.ncols() == 0:
        return zero_module(M.algebra), B
    # coordinates: solve B x = action * B
    sol_basis = _left_inverse(B)
    action = [sol_basis * (a * B) for a in M.action]
    return Representation(M.algebra, action, verts, name), B


def _left_inverse(B):
    """A matrix X with X B = I (B has independent columns)."""
    F = la.field_of(B)
    r, c = la.shape(B)
    piv = la.rref(B.transpose())[1]
    # rows piv of B form an invertible c x c block
    Bp = la.select_rows(B, piv)
    inv = Bp.inv()
    X = F.zeros(c, r)
    for a, p in enumerate(piv):
        for i in range(c):
            X[i, p] = inv[i, a]
    return X


def quotient(M: Representation, space, name: str = ""):
    """Quotient module M/U.  Returns (module, projection matrix M -> M/U)."""
    F = M.field
    A = M.algebra
    U, uverts = adapted_basis(M, space)
    cols, verts = [], []
    for v in range(A.n_vertices):
        idx = M.indices(v)
        ev_space = la.select_columns(F.identity(M.dim), idx)
        uv = [c for c, w in enumerate(uverts) if w == v]
        Uv = la.select_columns(U, uv) if uv else F.zeros(M.dim, 0)
        comp = la.complement(Uv, ev_space) if idx else F.zeros(M.dim, 0)
        for c in range(comp.ncols()):
            cols.append(la.select_columns(comp, [c]))
            verts.append(v)
    if not cols:
        return zero_module(A), F.zeros(0, M.dim)
    C = la.hstack(cols)
    full = la.hstack([U, C]) if U.ncols() else C
    inv = full.inv()
    proj = la.select_rows(inv, range(U.ncols(), M.dim))
    action = [proj * a * C for a in M.action]
    return Representation(A, action, verts, name), proj


def zero_module(A: FinDimAlgebra) -> Representation:
    F = A.field
    return Representation(A, [F.zeros(0, 0) for _ in range(A.dim)], [], "0")


def direct_sum(mods, name: str = "") -> Representation:
    A = mods[0].algebra
    action = [la.block_diag([m.action[k] for m in mods]) if any(m.dim for m in mods)
              else A.field.zeros(0, 0) for k in range(A.dim)]
    verts = [v for m in mods for v in m.vertex]
    summands = None
    if all(m.summands is not None for m in mods):
        summands = []
        off = 0
        for m in mods:
            for v, o, idx in m.summands:
                summands.append((v, o + off, idx))
            off += m.dim
    return Representation(A, action, verts, name, summands=summands)


def from_action(A: FinDimAlgebra, mats, name: str = "") -> Representation:
    """Module from arbitrary action matrices (one per basis vector); rebased to a vertex-adapted basis."""
    F = A.field
    d = mats[0].nrows()
    raw = Representation(A, mats, [0] * d, name)
    B, verts = adapted_basis(raw, F.identity(d))
    Binv = B.inv()
    return Representation(A, [Binv * m * B for m in mats], verts, name)


def projective(A: FinDimAlgebra, v: int) -> Representation:
    """P_v = A e_v on the Peirce basis vectors with source v (cached, treat as read-only)."""
    key = ("projective", v)
    if key not in A._cache:
        idx = A.peirce_indices(None, v)
        L = A.left_mats()
        action = [la.submatrix(L[k], idx, idx) for k in range(A.dim)]
        verts = [A.tags[k][0] for k in idx]
        A._cache[key] = Representation(A, action, verts, f"P{v + 1}", summands=[(v, 0, idx)])
    return A._cache[key]


def projective_sum(A: FinDimAlgebra, vertices) -> Representation:
    if not vertices:
        M = zero_module(A)
        M.summands = []
        return M
    return direct_sum([projective(A, v) for v in vertices], "+".join(f"P{v + 1}" for v in vertices))


def regular_module(A: FinDimAlgebra) -> Representation:
    return projective_sum(A, list(range(A.n_vertices)))


# ----------------------------------------------------------------------------
# radical, top, simples

def radical_of_module(M: Representation):
    """Columns spanning rad(A) M."""
    A = M.algebra
    F = M.field
    if M.dim == 0:
        return F.zeros(0, 0)
    n = A.n_vertices
    imgs = [M.act(g) for g in A.generators()[n:]]
    if not imgs:
        return F.zeros(M.dim, 0)
    return la.column_space(la.hstack(imgs))


def top_multiplicities(M: Representation):
    """[Top M : L_c] for each isomorphism class c of simples (indexed like A.iso_classes())."""
    A = M.algebra
    rad = radical_of_module(M)
    out = []
    for cls in A.iso_classes():
        v = cls[0]
        ev = M.act(A.idempotents[v])
        total = la.rank(ev)
        inrad = la.rank(ev * rad) if rad.ncols() else 0
        out.append(total - inrad)
    return out


def simple_modules(A: FinDimAlgebra):
    """One simple module per isomorphism class of indecomposable projectives."""
    out = []
    for cls in A.iso_classes():
        P = projective(A, cls[0])
        S, _ = quotient(P, radical_of_module(P), f"L{cls[0] + 1}")
        out.append(S)
    return out


def simple_index_of_vertex(A: FinDimAlgebra):
    m = {}
    for c, cls in enumerate(A.iso_classes()):
        for v in cls:
            m[v] = c
    return m


# ----------------------------------------------------------------------------
# Hom spaces

def hom_space(M: Representation, N: Representation):
    """Basis (list of matrices N.dim x M.dim) of Hom_A(M, N)."""
    A = M.algebra
    F = M.field
    if M.dim == 0 or N.dim == 0:
        return []
    if M.summands is not None:
        return _hom_from_projective(M, N)
    n = A.n_vertices
    Mi = [M.indices(v) for v in range(n)]
    Ni = [N.indices(v) for v in range(n)]
    # variable offsets for blocks X_v : e_v M -> e_v N
    offs, tot = [], 0
    for v in range(n):
        offs.append(tot)
        tot += len(Ni[v]) * len(Mi[v])
    if tot == 0:
        return []
    rows = []
    for g in A.generators()[n:]:
        t, s = _tag_of(A, g)
        if not Mi[s] or not Ni[t]:
            continue
        AM = la.submatrix(M.act(g), Mi[t], Mi[s])   # e_t M <- e_s M
        AN = la.submatrix(N.act(g), Ni[t], Ni[s])
        nt, ms, mt, ns = len(Ni[t]), len(Mi[s]), len(Mi[t]), len(Ni[s])
        AMe = la.entries_rows(AM)
        ANe = la.entries_rows(AN)
        for i in range(nt):
            for j in range(ms):
                row = {}
                # (X_t AM)[i,j] = sum_k X_t[i,k] AM[k,j]
                for k in range(mt):
                    c = AMe[k][j]
                    if c != 0:
                        key = offs[t] + i * mt + k
                        row[key] = row.get(key, F.zero) + c
                # (AN X_s)[i,j] = sum_k AN[i,k] X_s[k,j]
                for k in range(ns):
                    c = ANe[i][k]
                    if c != 0:
                        key = offs[s] + k * ms + j
                        row[key] = row.get(key, F.zero) - c
                if any(x != 0 for x in row.values()):
                    rows.append(row)
    Msys = F.zeros(len(rows), tot)
    for r, row in enumerate(rows):
        for c, x in row.items():
            Msys[r, c] = x
    K = la.kernel(Msys) if rows else F.identity(tot)
    out = []
    for c in range(K.ncols()):
        X = F.zeros(N.dim, M.dim)
        for v in range(n):
            mv, nv = len(Mi[v]), len(Ni[v])
            for i in range(nv):
                for k in range(mv):
                    x = K[offs[v] + i * mv + k, c]
                    if x != 0:
                        X[Ni[v][i], Mi[v][k]] = x
        out.append(X)
    return out


def _tag_of(A, g):
    tags = {A.tags[k] for k, c in enumerate(g) if c != 0}
    if len(tags) != 1:
        raise AlgebraError("generator is not Peirce-homogeneous")
    return tags.pop()


def map_from_projective(P: Representation, N: Representation, images):
    """Matrix of the map P -> N sending the generator of summand i to images[i] (vector in N)."""
    F = N.field
    X = F.zeros(N.dim, P.dim)
    A = P.algebra
    for (v, off, idx), img in zip(P.summands, images):
        col = F.column(img)
        for a, k in enumerate(idx):
            c = N.action[k] * col
            for i in range(N.dim):
                x = c[i, 0]
                if x != 0:
                    X[i, off + a] = x
    return X


def generator_positions(P: Representation):
    """Index (inside P) of the generator e_v of each summand."""
    A = P.algebra
    vidx = A.vertex_of_idempotent_index()
    return [off + idx.index(vidx[v]) for v, off, idx in P.summands]


def _hom_from_projective(P: Representation, N: Representation):
    A = P.algebra
    F = N.field
    out = []
    for s, (v, off, idx) in enumerate(P.summands):
        for k in N.indices(v):
            images = [[F.zero] * N.dim for _ in P.summands]
            images[s][k] = F.one
            out.append(map_from_projective(P, N, images))
    return out


def hom_dimension(M: Representation, N: Representation) -> int:
    if M.summands is not None:
        return sum(len(N.indices(v)) for v, _, _ in M.summands)
    return len(hom_space(M, N))


# ----------------------------------------------------------------------------
# projective covers and resolutions

def projective_cover(M: Representation):
    """(P, matrix of the surjection P -> M)."""
    A = M.algebra
    F = M.field
    if M.dim == 0:
        P = projective_sum(A, [])
        return P, F.zeros(0, 0)
    rad = radical_of_module(M)
    verts, images = [], []
    for cls in A.iso_classes():
        v = cls[0]
        idx = M.indices(v)
        ev_space = la.select_columns(F.identity(M.dim), idx)
        radv = la.span_intersection(rad, ev_space) if rad.ncols() else F.zeros(M.dim, 0)
        comp = la.complement(radv, ev_space)
        for c in range(comp.ncols()):
            verts.append(v)
            images.append(la.col(comp, c))
    P = projective_sum(A, verts)
    return P, map_from_projective(P, M, images)


class Complex:
    """Cochain complex of modules; ``mods[k]`` sits in degree ``lo + k``.

    ``diffs[k]`` is the matrix of d: mods[k] -> mods[k+1].
    """

    def __init__(self, mods, diffs, lo: int):
        self.mods = list(mods)
        self.diffs = list(diffs)
        self.lo = lo

    def module(self, deg):
        k = deg - self.lo
        if 0 <= k < len(self.mods):
            return self.mods[k]
        return None

    def d(self, deg):
        """Differential out of degree deg (None if target or source is missing)."""
        k = deg - self.lo
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return None

    def degrees(self):
        return list(range(self.lo, self.lo + len(self.mods)))

    def check(self) -> bool:
        for k in range(len(self.diffs) - 1):
            if not la.is_zero(self.diffs[k + 1] * self.diffs[k]):
                return False
        return True


class Resolution(Complex):
    """Projective resolution P_m -> ... -> P_0 (degrees -m..0) with augmentation to the module."""

    def __init__(self, module, projs, dmaps, augmentation):
        # projs[k] = P_k, dmaps[k] : P_{k+1} -> P_k
        self.module_resolved = module
        self.projs = projs
        self.dmaps = dmaps
        self.augmentation = augmentation
        mods = list(reversed(projs))
        diffs = list(reversed(dmaps))
        super().__init__(mods, diffs, -(len(projs) - 1))

    @property
    def length(self):
        return len(self.projs) - 1


class ResolutionTooLong(AlgebraError):
    pass


def minimal_projective_resolution(M: Representation, max_len: int = 12, stop_after: int | None = None) -> Resolution:
    """Iterated projective covers of kernels; with ``stop_after`` only P_0..P_stop_after are built."""
    A = M.algebra
    F = M.field
    P0, eps = projective_cover(M)
    projs, dmaps = [P0], []
    prev_map = eps
    prev = P0
    while True:
        K = la.kernel(prev_map) if prev.dim else F.zeros(0, 0)
        if K.ncols() == 0:
            break
        if stop_after is not None and len(projs) > stop_after:
            break
        if len(projs) > max_len:
            raise ResolutionTooLong(f"resolution longer than cap {max_len}")
        Kmod, incl = submodule(prev, K)
        P, cov = projective_cover(Kmod)
        d = incl * cov
        projs.append(P)
        dmaps.append(d)
        prev_map, prev = d, P
    return Resolution(M, projs, dmaps, eps)


# ----------------------------------------------------------------------------
# Ext via Hom(P(M), N)

def ext_dimensions(M: Representation, N: Representation, up_to: int, max_len: int = 12):
    """dim Ext^k(M, N) for k = 0..up_to, from Hom(P_k(M), N) (independent of the End-complex route)."""
    res = minimal_projective_resolution(M, max_len, stop_after=up_to + 1)
    F = M.field
    dims = []
    homs = []
    for k in range(up_to + 2):
        if k < len(res.projs):
            homs.append(sum(len(N.indices(v)) for v, _, _ in res.projs[k].summands))
        else:
            homs.append(0)
    # coboundary delta_k : Hom(P_k, N) -> Hom(P_{k+1}, N), f -> f d_{k+1}
    ranks = []
    for k in range(up_to + 1):
        if k + 1 >= len(res.projs) or homs[k] == 0:
            ranks.append(0)
            continue
        P, Q = res.projs[k], res.projs[k + 1]
        d = res.dmaps[k]
        gens_Q = generator_positions(Q)
        cols = []
        for s, (v, off, idx) in enumerate(P.summands):
            for j in N.indices(v):
                images = [[F.zero] * N.dim for _ in P.summands]
                images[s][j] = F.one
                f = map_from_projective(P, N, images)
                fd = f * d
                cols.append(la.select_columns(fd, gens_Q))
        # flatten each (N.dim x #gens) block into a column
        flat = [F.column(c.entries()) for c in cols]
        ranks.append(la.rank(la.hstack(flat)))
    for k in range(up_to + 1):
        prev = ranks[k - 1] if k > 0 else 0
        dims.append(homs[k] - ranks[k] - prev)
    return dims


# ----------------------------------------------------------------------------
# induction

class InducedModule(Representation):
    """A (x) M over an embedding, with access to classes of elementary tensors."""

    def tensor_class(self, x, m):
        """Coordinates of the class of x (x) m in the quotient basis (x in A, m in M)."""
        F = self.field
        v = F.zeros(self._vdim, 1)
        for w, (xb, xb_inv, off, midx) in enumerate(self._pieces):
            # component of x in A iota(e_w) and of m in e_w M
            xe = self._amb.mul(x, self._iota_e[w])
            xc = xb_inv * F.column(xe)
            mc = [m[k] for k in midx]
            for a in range(xc.nrows()):
                if xc[a, 0] == 0:
                    continue
                for b, mm in enumerate(mc):
                    if mm != 0:
                        v[off + a * len(midx) + b, 0] += xc[a, 0] * mm
        return la.col(self._proj * v, 0)


def induce(emb: SubalgebraEmbedding, M: Representation, name: str = "") -> InducedModule:
    """A (x)_B M as A (x)_L M modulo the relations x iota(b) (x) m - x (x) b m."""
    A, B = emb.amb, emb.sub
    F = A.field
    nB = B.n_vertices
    iota_e = [emb(e) for e in B.idempotents]
    pieces = []
    off = 0
    rowsA = []
    for w in range(nB):
        # basis of A iota(e_w), adapted to A's idempotents on the left
        Rm = A.right_matrix(iota_e[w])
        cols = []
        for v in range(A.n_vertices):
            sp = la.column_space(A.left_matrix(A.idempotents[v]) * Rm)
            if sp.ncols():
                cols.append(sp)
        xb = la.hstack(cols) if cols else F.zeros(A.dim, 0)
        xb_inv = _left_inverse(xb) if xb.ncols() else F.zeros(0, A.dim)
        midx = M.indices(w)
        pieces.append((xb, xb_inv, off, midx))
        off += xb.ncols() * len(midx)
    vdim = off
    rel_rows = []
    for g in B.generators()[nB:]:
        t, s = _tag_of(B, g)
        ig = emb(g)
        xb_t, _, off_t, midx_t = pieces[t]
        xb_s, xbinv_s, off_s, midx_s = pieces[s]
        if not midx_s or xb_t.ncols() == 0:
            continue
        # x iota(g) expressed in basis of A iota(e_s)
        right = xbinv_s * (A.right_matrix(ig) * xb_t)   # columns: x_a iota(g)
        gm = la.submatrix(M.act(g), midx_t, midx_s)       # e_t M <- e_s M
        for a in range(xb_t.ncols()):
            for b in range(len(midx_s)):
                row = {}
                for a2 in range(right.nrows()):
                    c = right[a2, a]
                    if c != 0:
                        key = off_s + a2 * len(midx_s) + b
                        row[key] = row.get(key, F.zero) + c
                for b2 in range(len(midx_t)):
                    c = gm[b2, b]
                    if c != 0:
                        key = off_t + a * len(midx_t) + b2
                        row[key] = row.get(key, F.zero) - c
                if any(x != 0 for x in row.values()):
                    rel_rows.append(row)
    Rel = F.zeros(vdim, len(rel_rows))
    for c, row in enumerate(rel_rows):
        for k, x in row.items():
            Rel[k, c] = x
    # the big module A (x)_L M with left A-action
    action = []
    for k in range(A.dim):
        act = F.zeros(vdim, vdim)
        Lk = A.left_mats()[k]
        for w, (xb, xb_inv, off_w, midx) in enumerate(pieces):
            if xb.ncols() == 0 or not midx:
                continue
            blk = xb_inv * Lk * xb
            nm = len(midx)
            for a in range(blk.nrows()):
                for a2 in range(blk.ncols()):
                    c = blk[a, a2]
                    if c != 0:
                        for b in range(nm):
                            act[off_w + a * nm + b, off_w + a2 * nm + b] = c
        action.append(act)
    verts = []
    for w, (xb, xb_inv, off_w, midx) in enumerate(pieces):
        for a in range(xb.ncols()):
            col = la.col(xb, a)
            # adapted basis: each column lies in one e_v A
            vv = [v for v in range(A.n_vertices) if A.mul(A.idempotents[v], col) == col]
            for b in range(len(midx)):
                verts.append(vv[0])
    big = Representation(A, action, verts, "AxM")
    Q, proj = quotient(big, la.column_space(Rel) if Rel.ncols() else F.zeros(vdim, 0), name or f"ind({M.name})")
    out = InducedModule(A, Q.action, Q.vertex, Q.name)
    out._pieces = pieces
    out._proj = proj
    out._vdim = vdim
    out._amb = A
    out._iota_e = iota_e
    return out


def right_radical_image(emb: SubalgebraEmbedding):
    """Columns spanning A iota(rad B)."""
    A, B = emb.amb, emb.sub
    nB = B.n_vertices
    imgs = [A.right_matrix(emb(g)) for g in B.generators()[nB:]]
    if not imgs:
        return A.field.zeros(A.dim, 0)
    return la.column_space(la.hstack(imgs))


def is_induction_exact(emb: SubalgebraEmbedding) -> bool:
    """A is projective as a right B-module."""
    A, B = emb.amb, emb.sub
    rr = right_radical_image(emb)
    total = 0
    for cls in B.iso_classes():
        w = cls[0]
        Re = A.right_matrix(emb(B.idempotents[w]))
        top = la.rank(Re) - (la.rank(Re * rr) if rr.ncols() else 0)
        proj_dim = len(B.peirce_indices(w, None))  # dim e_w B
        total += top * proj_dim
    return total == A.dim


# ----------------------------------------------------------------------------
# isomorphism test

def radical_layers(M: Representation):
    cur = M
    dims = []
    F = M.field
    space = F.identity(M.dim)
    A = M.algebra
    n = A.n_vertices
    gens = [M.act(g) for g in A.generators()[n:]]
    while space.ncols():
        dims.append(space.ncols())
        if not gens:
            break
        space = la.column_space(la.hstack([g * space for g in gens]))
    return dims


def isomorphism_status(M: Representation, N: Representation, rng: random.Random | None = None, draws: int = 32):
    """('iso', matrix) | ('not-iso', None) | ('undetermined', None)."""
    rng = rng or random.Random(0)
    F = M.field
    if M.dim != N.dim or M.dim_vector() != N.dim_vector():
        return "not-iso", None
    if M.dim == 0:
        return "iso", F.zeros(0, 0)
    if radical_layers(M) != radical_layers(N) or top_multiplicities(M) != top_multiplicities(N):
        return "not-iso", None
    H = hom_space(M, N)
    if not H:
        return "not-iso", None
    tries = draws if not F.p else max(draws, 256)
    for t in range(tries):
        if t == 0 and len(H) == 1:
            X = H[0]
        else:
            X = F.zeros(N.dim, M.dim)
            for h in H:
                c = F.random_scalar(rng, -3, 3)
                if c != 0:
                    X += c * h
        if la.is_invertible_matrix(X):
            return "iso", X
    # M = N forces Hom(M, N), Hom(N, M), End M, End N and the socles to agree
    d = len(H)
    if any(len(hom_space(X, Y)) != d for X, Y in ((N, M), (M, M), (N, N))):
        return "not-iso", None
    if any(len(hom_space(L, M)) != len(hom_space(L, N)) for L in simple_modules(M.algebra)):
        return "not-iso", None
    return "undetermined", None


def module_isomorphic(M: Representation, N: Representation, rng: random.Random | None = None):
    """An invertible ModuleMap M -> N, or None."""
    status, X = isomorphism_status(M, N, rng)
    if status == "iso":
        return ModuleMap(M, N, X)
    return None
