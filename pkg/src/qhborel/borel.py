"""Reconstruction of a basic algebra from a coconnected minimal model,
synthesis of (R, B, iota), conjugacy search and diagram-commutation checks."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import networkx as nx

from . import linalg as la
from .ainfty import (
    AInftyError,
    AInftyMorphism,
    ExtModel,
    InducedAInftyMap,
    Transfer,
    complete_triangle,
    compose,
    strict_morphism,
    truncate,
)
from .algebra import (
    AlgebraError,
    FinDimAlgebra,
    Quiver,
    SubalgebraEmbedding,
    build_path_algebra,
    embedding_from_generators,
    projective_endomorphism_algebra,
)
from .endcomplex import DGEnd
from .examples import fenwick_projectives, order_on_projective_algebra  # noqa: F401  (re-export)
from .modules import (
    ModuleMap,
    Representation,
    generator_positions,
    induce,
    isomorphism_status,
    projective,
    projective_cover,
    simple_modules,
    top_multiplicities,
)
from .qh import BorelReport, SimpleOrder, check_quasi_hereditary, match_modules, standard_modules, verify_exact_borel
from .twisted import TwistedModule, realize, realize_data, realize_map, twmod_apply


class SynthesisError(AlgebraError):
    pass


# ----------------------------------------------------------------------------
# reconstruction

@dataclass
class ReconstructedAlgebra:
    quiver: Quiver
    relations: list          # list of [(coefficient, right-to-left arrow names)]
    algebra: FinDimAlgebra
    arrow_of: dict           # model basis index -> arrow name
    model: object

    def arrow_index(self, a: int) -> int:
        """Basis index (in the algebra) of the arrow dual to model element a."""
        return self.algebra.names.index(self.arrow_of[a])


def reconstruct(model, max_length: int = 40) -> ReconstructedAlgebra:
    """Path algebra on the duals of the degree-1 part, modulo the relations
    read off from the components of m_n landing in degree 2."""
    if not model.is_minimal():
        raise AInftyError("reconstruction needs a minimal model")
    if not model.is_coconnected():
        raise AInftyError("reconstruction needs a coconnected model (truncate first)")
    F = model.field
    deg1 = [a for a in range(model.dim) if model.deg[a] == 1]
    deg2 = [c for c in range(model.dim) if model.deg[c] == 2]
    arrow_of = {}
    arrows = []
    for k, a in enumerate(deg1):
        name = f"a{k + 1}"
        arrow_of[a] = name
        arrows.append((model.src[a] + 1, model.tgt[a] + 1, name))
    q = Quiver(model.n_obj, tuple(arrows))
    rel_terms = {c: [] for c in deg2}
    if deg2:
        for n in range(2, model.cap + 1):
            for tup in model.tuples(n):
                if any(model.deg[k] != 1 for k in tup):
                    continue
                vec = model.m(n, tup)
                for c, x in vec.items():
                    if c in rel_terms and x != 0:
                        rel_terms[c].append((x, [arrow_of[k] for k in tup]))
    relations = [terms for c, terms in rel_terms.items() if terms]
    rels = [[(x, q.path_from_names(names)) for x, names in terms] for terms in relations]
    try:
        B = build_path_algebra(q, rels, F, max_length=max_length)
    except AlgebraError as e:
        raise AInftyError(f"reconstructed quotient is not finite-dimensional: {e}") from e
    return ReconstructedAlgebra(q, relations, B, arrow_of, model)


def quiver_module(B: FinDimAlgebra, dims, arrow_mats: dict, name: str = "") -> Representation:
    """Module over a path algebra from vertex dimensions and arrow matrices
    (arrow a: i -> j acts by a dims[j] x dims[i] matrix)."""
    F = B.field
    q = B.quiver
    off, total = [], 0
    for d in dims:
        off.append(total)
        total += d
    verts = [v for v, d in enumerate(dims) for _ in range(d)]
    action = []
    for t, s, arr in B.paths:
        if not arr:
            m = F.zeros(total, total)
            for r in range(dims[t - 1]):
                m[off[t - 1] + r, off[t - 1] + r] = F.one
            action.append(m)
            continue
        cur = None
        for k in reversed(arr):
            src, tgt, nm = q.arrows[k]
            blk = arrow_mats.get(nm)
            full = F.zeros(total, total)
            if blk is not None:
                for r in range(blk.nrows()):
                    for c in range(blk.ncols()):
                        if blk[r, c] != 0:
                            full[off[tgt - 1] + r, off[src - 1] + c] = blk[r, c]
            cur = full if cur is None else full * cur
        action.append(cur)
    M = Representation(B, action, verts, name)
    if not M.check():
        raise AInftyError("arrow matrices violate the relations")
    return M


def keller_module(recon: ReconstructedAlgebra, T: TwistedModule, name: str = "") -> Representation:
    """The module over the reconstructed algebra: arrow dual to a acts by M_a."""
    if T.base is not recon.model:
        raise AInftyError("twisted module is not over the reconstruction's model")
    mats = {recon.arrow_of[a]: M for a, M in T.w.items()}
    return quiver_module(recon.algebra, T.dims, mats, name or f"K({T.name})")


def twisted_from_module(recon: ReconstructedAlgebra, N: Representation, name: str = "") -> TwistedModule:
    """Inverse of keller_module: X_i = e_i N, M_a = action of the arrow dual to a."""
    B = recon.algebra
    model = recon.model
    dims = [len(N.indices(v)) for v in range(B.n_vertices)]
    w = {}
    for a, nm in recon.arrow_of.items():
        k = B.names.index(nm)
        w[a] = la.submatrix(N.action[k], N.indices(model.tgt[a]), N.indices(model.src[a]))
    return TwistedModule(model, dims, w, name or N.name)


def module_map_blocks(Phi, N: Representation, N2: Representation):
    """Per-vertex blocks of a module map N -> N2."""
    return [la.submatrix(Phi, N2.indices(v), N.indices(v)) for v in range(N.algebra.n_vertices)]


# ----------------------------------------------------------------------------
# synthesis of (R, B, iota)

@dataclass
class BorelSynthesis:
    A: FinDimAlgebra
    order: SimpleOrder
    ext: ExtModel
    recon: ReconstructedAlgebra
    B: FinDimAlgebra
    Q: list                          # realized modules Q_i
    Q_vertices: list                 # per i: A-vertices of the summands of Q_i (0-based)
    R: FinDimAlgebra
    order_R: SimpleOrder
    iota: SubalgebraEmbedding
    report: BorelReport
    notes: list = field(default_factory=list)

    def multiplicities(self):
        """{i: {A-vertex (1-based): multiplicity}} for Q_i."""
        out = {}
        for i, vs in enumerate(self.Q_vertices):
            d = {}
            for v in vs:
                d[v + 1] = d.get(v + 1, 0) + 1
            out[i + 1] = dict(sorted(d.items()))
        return out


def _projective_iso(Q: Representation):
    """(vertices, iso from the canonical projective sum onto Q); Q must be projective."""
    P, cover = projective_cover(Q)
    if P.dim != Q.dim or not la.is_invertible_matrix(cover):
        raise SynthesisError(f"{Q.name} is not projective")
    return [v for v, _, _ in P.summands], P, cover


def endomorphism_to_R(R: FinDimAlgebra, P: Representation, Phi) -> list:
    """Element of End_A(P)^op (P the canonical sum behind R) for the module map Phi."""
    x = R.zero()
    gens = generator_positions(P)
    for s, g in enumerate(gens):
        for t, (v, off, idx) in enumerate(P.summands):
            for a, k in enumerate(idx):
                c = Phi[off + a, g]
                if c != 0:
                    key = (s, t, k)
                    if key not in R.proj_index:
                        raise SynthesisError("module map leaves the Peirce pattern")
                    x[R.proj_index[key]] += c
    return x


def synthesize_borel_pair(A: FinDimAlgebra, order: SimpleOrder, cap: int | None = None,
                          regular_cap: int = 4, rng=None) -> BorelSynthesis:
    """(R, B, iota) with B a regular exact Borel subalgebra of R, R Morita equivalent to A.

    B is reconstructed from the truncated minimal model of Ext_A(Delta, Delta);
    each projective B-module becomes a twisted module over that model, its
    realization is Q_i, and iota comes from right multiplication transported
    through the realization functor.
    """
    rng = rng or random.Random(0)
    qh = check_quasi_hereditary(A, order, rng)
    if not qh.quasi_hereditary:
        raise SynthesisError("input is not quasi-hereditary for the given order")
    deltas = standard_modules(A, order)
    ext = ExtModel(deltas, cap)
    model = ext.model
    tr = truncate(model)
    recon = reconstruct(tr)
    B = recon.algebra
    incl = _truncation_inclusion(tr, model)
    reals, tw, Bproj = [], [], []
    for v in range(B.n_vertices):
        PB = projective(B, v)
        T = twisted_from_module(recon, PB, f"P{v + 1}^B")
        Tm = twmod_apply(incl, T)
        reals.append(realize_data(Tm, ext.transfer, f"Q{v + 1}"))
        tw.append(Tm)
        Bproj.append(PB)
    Qs = [r.module for r in reals]
    verts, canon, isos = [], [], []
    for Q in Qs:
        vs, P, cover = _projective_iso(Q)
        verts.append(vs)
        canon.append(P)
        isos.append(cover)
    all_verts = [v for vs in verts for v in vs]
    labels = [f"Q{i + 1}.{k + 1}" for i, vs in enumerate(verts) for k in range(len(vs))]
    R = projective_endomorphism_algebra(A, all_verts, labels)
    from .modules import projective_sum
    Pall = projective_sum(A, all_verts)
    offsets, o = [], 0
    for P in canon:
        offsets.append(o)
        o += P.dim
    F = A.field
    cols = []
    for b in range(B.dim):
        t, s = B.tags[b]
        # right multiplication by b: P_t^B = B e_t -> B e_s
        PT, PS = Bproj[t], Bproj[s]
        rb = B.right_matrix(B.basis(b))
        Phi_B = la.submatrix(rb, B.peirce_indices(None, s), B.peirce_indices(None, t))
        if not ModuleMap(PT, PS, Phi_B).is_homomorphism():
            raise SynthesisError("right multiplication is not a module map")
        blocks = module_map_blocks(Phi_B, PT, PS)
        Hmap = realize_map(reals[t], reals[s], blocks)
        local = isos[s].inv() * Hmap * isos[t]
        Phi = F.zeros(Pall.dim, Pall.dim)
        for r in range(local.nrows()):
            for c in range(local.ncols()):
                if local[r, c] != 0:
                    Phi[offsets[s] + r, offsets[t] + c] = local[r, c]
        cols.append(F.column(endomorphism_to_R(R, Pall, Phi)))
    iota = SubalgebraEmbedding(B, R, la.hstack(cols), check=True, name="iota")
    order_R = order_on_projective_algebra(R, order)
    report = verify_exact_borel(R, order_R, iota, regular_cap=regular_cap, rng=rng)
    if not report.is_exact_borel:
        raise SynthesisError(f"synthesized pair fails verification: {report.as_dict()}")
    return BorelSynthesis(A, order, ext, recon, B, Qs, verts, R, order_R, iota, report)


def _truncation_inclusion(tr, model) -> AInftyMorphism:
    if tr is model:
        from .ainfty import identity_morphism
        return identity_morphism(model)
    keep = tr.parent_index
    one = model.field.one
    return strict_morphism(tr, model, lambda k: {keep[k]: one}, name="incl")


# ----------------------------------------------------------------------------
# conjugacy search

def verify_conjugation(emb: SubalgebraEmbedding, emb2: SubalgebraEmbedding, u) -> bool:
    """u iota(B) u^{-1} = iota'(B') as subspaces."""
    A = emb.amb
    if not A.is_invertible(u):
        return False
    uinv = A.inverse(u)
    M = A.left_matrix(u) * A.right_matrix(uinv) * emb.matrix
    if la.rank(M) != emb2.sub.dim or emb.sub.dim != emb2.sub.dim:
        return False
    return la.rank(la.hstack([M, emb2.matrix])) == emb2.sub.dim


@dataclass
class ConjugationResult:
    unit: object
    status: str                      # "found" | "no witness found (bounded search)" | "precondition failed"
    matching: list | None = None
    tried: int = 0
    notes: list = field(default_factory=list)


def _vertex_matchings(emb, emb2, rng, limit: int = 24):
    """Perfect matchings i -> j with A (x)_B L_i = A (x)_B' L'_j."""
    I1 = [induce(emb, L) for L in simple_modules(emb.sub)]
    I2 = [induce(emb2, L) for L in simple_modules(emb2.sub)]
    cand = [[j for j, N in enumerate(I2) if isomorphism_status(M, N, rng)[0] == "iso"] for M in I1]
    out = []
    for perm in itertools.product(*cand):
        if len(set(perm)) == len(perm):
            out.append(list(perm))
            if len(out) >= limit:
                break
    return out


def _arrow_groups(B: FinDimAlgebra):
    groups = {}
    for src, tgt, name in B.quiver.arrows:
        groups.setdefault((src - 1, tgt - 1), []).append(name)
    return groups


def _scalar_choices(F):
    base = [1, -1, 2, -2, 3, -3]
    out = [F(x) for x in base]
    out += [F.one / F(2), -F.one / F(2)] if F.p != 2 else []
    return out


def _candidate_isos(B, B2, sigma, F, max_twists: int = 64):
    """Algebra maps B -> B' sending e_i to e'_sigma(i) and arrows to rescaled arrows."""
    g1, g2 = _arrow_groups(B), _arrow_groups(B2)
    pairs = []
    for (s, t), names in sorted(g1.items()):
        names2 = g2.get((sigma[s], sigma[t]), [])
        if len(names2) != len(names):
            return
        pairs.extend(zip(names, names2))
    if sum(len(v) for v in g2.values()) != len(pairs):
        return
    # arrows off a spanning forest carry the scalars that vertex rescalings cannot absorb
    g = nx.Graph()
    g.add_nodes_from(range(B.n_vertices))
    free = []
    for a, b in pairs:
        src, tgt = next((x[0] - 1, x[1] - 1) for x in B.quiver.arrows if x[2] == a)
        if src != tgt and not nx.has_path(g, src, tgt):
            g.add_edge(src, tgt)
        else:
            free.append(a)
    choices = _scalar_choices(F)
    count = 0
    for lam in itertools.product(choices, repeat=len(free)):
        scal = dict(zip(free, lam))
        images = {f"e{i + 1}": B2.basis(B2.names.index(f"e{sigma[i] + 1}")) for i in range(B.n_vertices)}
        for a, b in pairs:
            images[a] = B2.scale(scal.get(a, F.one), B2.basis(B2.names.index(b)))
        yield images
        count += 1
        if count >= max_twists:
            return


def conjugate_subalgebras(emb: SubalgebraEmbedding, emb2: SubalgebraEmbedding, rng=None,
                          draws: int = 64) -> ConjugationResult:
    """A unit u of A with u iota(B) u^{-1} = iota'(B'), by bounded search.

    B and B' must be presented by bound quivers.  Each candidate isomorphism
    phi: B -> B' gives a linear system u iota(b) = iota'(phi(b)) u; invertible
    elements of its solution space are sampled and verified exactly.
    """
    rng = rng or random.Random(0)
    A = emb.amb
    F = A.field
    B, B2 = emb.sub, emb2.sub
    if emb2.amb is not A:
        raise AlgebraError("embeddings into different algebras")
    if B.quiver is None or B2.quiver is None:
        raise AlgebraError("conjugacy search needs quiver-presented subalgebras")
    if B.dim != B2.dim or B.n_vertices != B2.n_vertices:
        return ConjugationResult(None, "precondition failed", notes=["dimensions differ"])
    matchings = _vertex_matchings(emb, emb2, rng)
    if not matchings:
        return ConjugationResult(None, "precondition failed",
                                 notes=["no matching of simples with isomorphic induced modules"])
    tries = draws if not F.p else max(draws, 256)
    tried = 0
    for sigma in matchings:
        for images in _candidate_isos(B, B2, sigma, F):
            try:
                phi = embedding_from_generators(B, B2, images)
            except AlgebraError:
                continue
            tried += 1
            blocks = []
            for b in range(B.dim):
                x = emb(B.basis(b))
                y = emb2(phi(B.basis(b)))
                blocks.append(A.right_matrix(x) - A.left_matrix(y))
            K = la.kernel(la.vstack(blocks))
            if K.ncols() == 0:
                continue
            for t in range(tries):
                coeffs = [F.one] if K.ncols() == 1 else [F.random_scalar(rng, -3, 3) for _ in range(K.ncols())]
                u = [F.zero] * A.dim
                for c, x in enumerate(coeffs):
                    if x != 0:
                        for r in range(A.dim):
                            u[r] += x * K[r, c]
                if A.is_invertible(u) and verify_conjugation(emb, emb2, u):
                    return ConjugationResult(u, "found", sigma, tried)
                if K.ncols() == 1:
                    break
    return ConjugationResult(None, "no witness found (bounded search)", None, tried)


# ----------------------------------------------------------------------------
# commutation of the main diagram on samples

def _chain_isomorphism(Qp, Q, rng, draws: int = 64):
    """Componentwise invertible chain map Q' -> Q, or None."""
    if Qp.degrees() != Q.degrees():
        return None
    for k in Q.degrees():
        if Q.mods[k].dim != Qp.mods[k].dim:
            return None
    C = DGEnd([Qp, Q])
    F = C.field
    src = C.blocks.get((1, 0, 0), [])
    Dm = C.block_matrix_d(1, 0, 0)
    Z = la.kernel(Dm) if Dm.nrows() else F.identity(len(src))
    for _ in range(draws):
        vec = {}
        for c in range(Z.ncols()):
            x = F.random_scalar(rng, -3, 3)
            if x == 0:
                continue
            for r in range(Z.nrows()):
                if Z[r, c] != 0:
                    vec[src[r]] = vec.get(src[r], F.zero) + x * Z[r, c]
        comps = {k: C.component_matrix(vec, k) for k in Q.degrees()} if vec else None
        if comps and all(M is not None and la.is_invertible_matrix(M) for M in comps.values()):
            return comps
    return None


class ConjugatedDGMap:
    """The strict dg isomorphism End*(Q'_1 + ...) -> End*(Q_1 + ...), x -> Psi x Psi^{-1}."""

    def __init__(self, Csrc: DGEnd, Ctgt: DGEnd, psis):
        self.Csrc, self.Ctgt = Csrc, Ctgt
        self.psis = psis
        self.inv = [{k: M.inv() for k, M in p.items()} for p in psis]
        self._cache = {}

    def basis(self, a: int) -> dict:
        if a in self._cache:
            return self._cache[a]
        i, j, n, k, s, q = self.Csrc.details[a]
        M = self.Csrc.component_matrix({a: self.Csrc.field.one}, k)
        out = {}
        if M is not None:
            N = self.psis[j][k + n] * M * self.inv[i][k]
            out = self.Ctgt.element_from_components(i, j, n, {k: N})
        self._cache[a] = out
        return out

    def __call__(self, x: dict) -> dict:
        out = {}
        for a, c in x.items():
            for b, y in self.basis(a).items():
                out[b] = out.get(b, 0) + c * y
        return {b: y for b, y in out.items() if y != 0}


@dataclass
class DiagramReport:
    commutes: bool
    samples: int
    failures: list
    matching: list
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {"commutes": self.commutes, "samples": self.samples, "failures": self.failures,
                "matching": self.matching, "notes": self.notes}


def main_diagram_samples(fmap: InducedAInftyMap, samples, rng=None) -> list:
    """Pairs (induce(realize_B(z)), realize_A(twmod(F, z))) for twisted modules z over Ext_B."""
    out = []
    for z in samples:
        RB = realize(z, fmap.ext_B.transfer)
        left = induce(fmap.emb, RB)
        right = realize(twmod_apply(fmap.map, z), fmap.transfer_A)
        out.append((z, left, right))
    return out


def check_main_diagram(fmap: InducedAInftyMap, samples, rng=None) -> DiagramReport:
    """induce(emb, realize_B(z)) = realize_A(twmod_apply(F, z)) for each sample."""
    rng = rng or random.Random(0)
    fails = []
    for z, left, right in main_diagram_samples(fmap, samples, rng):
        if isomorphism_status(left, right, rng)[0] != "iso":
            fails.append(z.name)
    return DiagramReport(not fails, len(samples), fails, list(range(fmap.emb.sub.n_vertices)))


def check_diagram_commutes(emb: SubalgebraEmbedding, emb2: SubalgebraEmbedding, samples_fn=None,
                           cap: int | None = None, rng=None) -> DiagramReport:
    """Instance check of the uniqueness diagram for two exact Borel subalgebras.

    Builds F: Ext_B(L, L) -> Ext_A and F': Ext_B'(L', L') -> Ext_A over a common
    End dg algebra (the induced complexes are identified by a chain
    isomorphism), completes the triangle g with F g = F', and compares
    induce(emb, realize_B(twmod(g, z))) with induce(emb2, realize_B'(z)).
    ``samples_fn(model_B')`` returns the twisted modules z (default: simples).
    """
    rng = rng or random.Random(0)
    from .twisted import simple_twisted
    L1 = simple_modules(emb.sub)
    L2 = simple_modules(emb2.sub)
    I1 = [induce(emb, L) for L in L1]
    I2 = [induce(emb2, L) for L in L2]
    matching = match_modules(I2, I1, rng)
    if matching is None:
        return DiagramReport(False, 0, ["simples do not induce to matching modules"], [])
    # reorder L2 so that object i of both sides induces to the same module
    order2 = [None] * len(L2)
    for j, i in enumerate(matching):
        order2[i] = j
    L2 = [L2[j] for j in order2]
    f1 = InducedAInftyMap(emb, L1, cap)
    f2 = InducedAInftyMap(emb2, L2, f1.ext_B.transfer.cap)
    psis = []
    for Qp, Q in zip(f2.T.CA.complexes, f1.T.CA.complexes):
        psi = _chain_isomorphism(Qp, Q, rng)
        if psi is None:
            return DiagramReport(False, 0, ["no chain isomorphism between induced resolutions"], matching)
        psis.append(psi)
    conj = ConjugatedDGMap(f2.T.CA, f1.T.CA, psis)
    iB2 = f2.ext_B.i_inf
    T2 = f2.T
    view = f1.transfer_A.view
    strict2 = AInftyMorphism(f2.ext_B.model, view, func=lambda n, tup: conj(T2(iB2.f(n, tup))),
                             cap=f1.map.cap, name="Ti'")
    F2 = compose(f1.transfer_A.p_inf, strict2, f1.map.cap)
    g = complete_triangle(f1.map, F2)
    model2 = f2.ext_B.model
    samples = samples_fn(model2) if samples_fn else [simple_twisted(model2, i) for i in range(model2.n_obj)]
    fails = []
    for z in samples:
        left = induce(emb, realize(twmod_apply(g, z), f1.ext_B.transfer))
        right = induce(emb2, realize(z, f2.ext_B.transfer))
        if isomorphism_status(left, right, rng)[0] != "iso":
            fails.append(z.name)
    return DiagramReport(not fails, len(samples), fails, matching)
