"""Strictly unital A-infinity algebras over L = k^N with finite bases.

Operations are stored in the displayed convention
    sum_{r+s+t=n} (-1)^{rs+t} m_{r+t+1}(1^r (x) m_s (x) 1^t) = 0,
with morphism components f_n of degree 1 - n.  Homotopy transfer runs on the
bar side (shifted elements, all structure maps of odd degree for b and h,
degree 0 for morphisms), where every sign is a plain Koszul sign; results are
converted back by ``_bar_sign``.
"""
from __future__ import annotations

import itertools

from . import linalg as la
from . import sparse as sp
from .endcomplex import Contraction, DGEnd


class AInftyError(Exception):
    pass


class CapTooSmall(AInftyError):
    pass


def sgn(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def _bar_sign(degs) -> int:
    """m_n(x) = _bar_sign(|x|) s^{-1} b_n(sx_1, ..., sx_n); same for morphisms."""
    n = len(degs)
    e = n * (n - 1) // 2 + sum((n - l) * d for l, d in enumerate(degs, start=1))
    return sgn(e)


def compositions(n: int):
    """All (j_1, ..., j_k) with j_l >= 1 summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


# ----------------------------------------------------------------------------
# algebras

class GradedBasis:
    """Common bookkeeping: per-basis-element degree, target and source object."""

    field: la.Field
    n_obj: int
    deg: list
    tgt: list
    src: list

    @property
    def dim(self):
        return len(self.deg)

    def vec_degree(self, x: dict):
        for k in x:
            return self.deg[k]
        return None

    def composable(self, tup) -> bool:
        return all(self.src[tup[l]] == self.tgt[tup[l + 1]] for l in range(len(tup) - 1))

    def m_vec(self, n: int, vecs) -> dict:
        return sp.multilinear(lambda t: self.m(n, t), vecs)


class AInftyAlgebra(GradedBasis):
    """Finite minimal-or-not A-infinity algebra with explicit unit basis elements.

    ``ops[n]`` maps a tuple of non-unit basis indices to a sparse vector;
    missing entries are zero.  ``units[i]`` is the basis index of 1_i.
    """

    def __init__(self, field, n_obj, deg, tgt, src, units, ops, cap, names=None):
        self.field = field
        self.n_obj = n_obj
        self.deg, self.tgt, self.src = list(deg), list(tgt), list(src)
        self.units = list(units)
        self._unit_set = set(self.units)
        self.ops = {n: dict(t) for n, t in ops.items()}
        self.cap = cap
        self.names = names or [f"b{k}" for k in range(len(self.deg))]

    def is_unit(self, k: int) -> bool:
        return k in self._unit_set

    def unit_vec(self, i: int) -> dict:
        return {self.units[i]: self.field.one}

    def m(self, n: int, tup) -> dict:
        if not self.composable(tup):
            return {}
        if any(k in self._unit_set for k in tup):
            if n != 2:
                return {}
            a, b = tup
            if a in self._unit_set:
                return {b: self.field.one}
            return {a: self.field.one}
        return self.ops.get(n, {}).get(tuple(tup), {})

    def positive(self):
        return [k for k in range(self.dim) if not self.is_unit(k)]

    def tuples(self, n: int):
        """Composable n-tuples of non-unit basis elements."""
        pos = self.positive()
        by_tgt = {}
        for k in pos:
            by_tgt.setdefault(self.tgt[k], []).append(k)
        out = [(k,) for k in pos]
        for _ in range(n - 1):
            out = [t + (k,) for t in out for k in by_tgt.get(self.src[t[-1]], [])]
        return out

    def is_minimal(self) -> bool:
        return not any(self.ops.get(1, {}).values())

    def is_coconnected(self) -> bool:
        return all(self.deg[k] > 0 for k in self.positive())

    def degree_dims(self):
        out = {}
        for k in range(self.dim):
            out[self.deg[k]] = out.get(self.deg[k], 0) + 1
        return dict(sorted(out.items()))


class DGAlgebraView(GradedBasis):
    """A DGEnd seen as an A-infinity algebra (m_1 = d, m_2 = composition)."""

    def __init__(self, C: DGEnd):
        self.C = C
        self.field = C.field
        self.n_obj = C.n_obj
        self.deg, self.tgt, self.src = C.deg, C.tgt, C.src
        self.cap = 2

    def m(self, n: int, tup) -> dict:
        if n == 1:
            return self.C.d(tup[0])
        if n == 2:
            return self.C.mu(tup[0], tup[1])
        return {}

    def unit_vec(self, i: int) -> dict:
        return self.C.unit(i)

    def is_unit(self, k: int) -> bool:
        return False


# ----------------------------------------------------------------------------
# morphisms

class AInftyMorphism:
    """Strictly unital morphism; ``comps[n]`` maps non-unit composable tuples of
    the source to sparse vectors of the target.  ``func`` (optional) computes
    components on demand instead."""

    def __init__(self, source, target, comps=None, cap=None, func=None, name="", vec_func=None):
        self.source = source
        self.target = target
        self.comps = {n: dict(t) for n, t in (comps or {}).items()}
        self.func = func
        self.vec_func = vec_func
        self.cap = cap if cap is not None else getattr(source, "cap", 2)
        self.name = name

    def f(self, n: int, tup) -> dict:
        S = self.source
        if not S.composable(tup):
            return {}
        if any(S.is_unit(k) for k in tup):
            if n == 1:
                return self.target.unit_vec(S.tgt[tup[0]])
            return {}
        if self.func is not None:
            return self.func(n, tuple(tup))
        return self.comps.get(n, {}).get(tuple(tup), {})

    def f_vec(self, n: int, vecs) -> dict:
        if self.vec_func is not None:
            return self.vec_func(n, vecs)
        return sp.multilinear(lambda t: self.f(n, t), vecs)

    def is_strict(self) -> bool:
        if self.func is not None:
            return False
        return all(not any(t.values()) for n, t in self.comps.items() if n >= 2)

    def first_matrix(self, src_idx, tgt_idx):
        """Matrix of f_1 between the given basis index lists."""
        F = self.source.field
        pos = {k: r for r, k in enumerate(tgt_idx)}
        M = F.zeros(len(tgt_idx), len(src_idx))
        for c, k in enumerate(src_idx):
            for r, x in self.f(1, (k,)).items():
                if r in pos:
                    M[pos[r], c] = x
                elif x != 0:
                    raise AInftyError("f_1 leaves the given target span")
        return M


def identity_morphism(A: AInftyAlgebra) -> AInftyMorphism:
    comps = {1: {(k,): {k: A.field.one} for k in A.positive()}}
    return AInftyMorphism(A, A, comps, cap=A.cap, name="id")


def strict_morphism(source, target, f1, name="") -> AInftyMorphism:
    """Strict morphism from a callable basis index -> sparse vector."""
    def func(n, tup):
        return f1(tup[0]) if n == 1 else {}
    return AInftyMorphism(source, target, func=func, cap=getattr(source, "cap", 2), name=name)


# ----------------------------------------------------------------------------
# tensor evaluation with Koszul signs

def _tensor_apply_blocks(parts, args, degs, sizes, out_deg):
    """Koszul sign for applying g_{j_1} (x) ... (x) g_{j_k} where g_{j} has degree
    out_deg(j) to the elementary tensor with degrees ``degs``."""
    sign = 1
    before = 0
    pos = 0
    for j in sizes:
        if out_deg(j) % 2:
            sign *= sgn(before)
        before += sum(degs[pos:pos + j])
        pos += j
    return sign


def stasheff_defect(A, tup) -> dict:
    """sum_{r+s+t=n} (-1)^{rs+t} m_{r+t+1}(1^r (x) m_s (x) 1^t) on a basis tuple."""
    n = len(tup)
    degs = [A.deg[k] for k in tup]
    out = {}
    for s in range(1, n + 1):
        for r in range(0, n - s + 1):
            t = n - r - s
            inner = A.m(s, tup[r:r + s])
            if not inner:
                continue
            sign = sgn(r * s + t) * (sgn(sum(degs[:r])) if s % 2 else 1)
            vec = sp.multilinear(
                lambda kk: A.m(r + t + 1, tup[:r] + kk + tup[r + s:]), [inner])
            sp.add_into(out, vec, sign)
    return out


def check_stasheff(A, up_to: int | None = None, tuples=None) -> dict:
    """Number of basis tuples with nonzero defect, per arity (all zero means pass)."""
    up_to = up_to or A.cap + 1
    report = {}
    for n in range(1, up_to + 1):
        cand = tuples(n) if tuples is not None else _all_tuples(A, n)
        report[n] = sum(1 for t in cand if stasheff_defect(A, t))
    return report


def _all_tuples(A, n):
    if isinstance(A, AInftyAlgebra):
        # include unit slots: strict unitality is part of the check
        by_tgt = {}
        for k in range(A.dim):
            by_tgt.setdefault(A.tgt[k], []).append(k)
        out = [(k,) for k in range(A.dim)]
        for _ in range(n - 1):
            out = [t + (k,) for t in out for k in by_tgt.get(A.src[t[-1]], [])]
        return out
    raise AInftyError("pass explicit tuples for large algebras")


def _comp_sign(sizes) -> int:
    e = 0
    acc = 0
    for j in sizes:
        acc += j
        e += (1 - j) * acc
    return sgn(e)


def morphism_defect(f: AInftyMorphism, tup) -> dict:
    """LHS - RHS of the morphism equation on a source basis tuple."""
    S, T = f.source, f.target
    n = len(tup)
    degs = [S.deg[k] for k in tup]
    out = {}
    for s in range(1, n + 1):
        for r in range(0, n - s + 1):
            t = n - r - s
            inner = S.m(s, tup[r:r + s])
            if not inner:
                continue
            sign = sgn(r * s + t) * (sgn(sum(degs[:r])) if s % 2 else 1)
            vec = sp.multilinear(lambda kk: f.f(r + t + 1, tup[:r] + kk + tup[r + s:]), [inner])
            sp.add_into(out, vec, sign)
    for sizes in compositions(n):
        k = len(sizes)
        if k > getattr(T, "cap", k) + 1 and isinstance(T, DGAlgebraView):
            continue
        vecs, pos = [], 0
        for j in sizes:
            vecs.append(f.f(j, tup[pos:pos + j]))
            pos += j
        if any(not v for v in vecs):
            continue
        sign = _comp_sign(sizes) * _tensor_apply_blocks(None, None, degs, sizes, lambda j: 1 - j)
        sp.add_into(out, T.m_vec(k, vecs), -sign)
    return out


def check_morphism(f: AInftyMorphism, up_to: int | None = None, tuples=None) -> dict:
    up_to = up_to or f.cap + 1
    S = f.source
    report = {}
    for n in range(1, up_to + 1):
        cand = tuples(n) if tuples is not None else S.tuples(n)
        report[n] = sum(1 for t in cand if morphism_defect(f, t))
    return report


# ----------------------------------------------------------------------------
# composition and inversion (displayed convention)

def compose(f: AInftyMorphism, g: AInftyMorphism, cap: int | None = None) -> AInftyMorphism:
    """f o g."""
    if g.target is not f.source:
        raise AInftyError("compose: target(g) != source(f)")
    S = g.source
    cap = cap or min(f.cap, g.cap)
    comps = {}
    for n in range(1, cap + 1):
        table = {}
        for tup in S.tuples(n):
            degs = [S.deg[k] for k in tup]
            out = {}
            for sizes in compositions(n):
                vecs, pos = [], 0
                for j in sizes:
                    vecs.append(g.f(j, tup[pos:pos + j]))
                    pos += j
                if any(not v for v in vecs):
                    continue
                sign = _comp_sign(sizes) * _tensor_apply_blocks(None, None, degs, sizes, lambda j: 1 - j)
                sp.add_into(out, f.f_vec(len(sizes), vecs), sign)
            if out:
                table[tup] = out
        comps[n] = table
    return AInftyMorphism(S, f.target, comps, cap=cap, name=f"{f.name}o{g.name}")


def invert(f: AInftyMorphism) -> AInftyMorphism:
    """Inverse of a morphism between finite A-infinity algebras with f_1 invertible."""
    S, T = f.source, f.target
    F = S.field
    src_idx, tgt_idx = S.positive(), T.positive()
    if len(src_idx) != len(tgt_idx):
        raise AInftyError("invert: f_1 is not invertible (dimension mismatch)")
    M = f.first_matrix(src_idx, tgt_idx)
    if not la.is_invertible_matrix(M):
        raise AInftyError("invert: f_1 is singular")
    Minv = M.inv()

    def f1_inv(vec):
        out = {}
        pos = {k: r for r, k in enumerate(tgt_idx)}
        for k, c in vec.items():
            if T.is_unit(k):
                out[S.units[T.units.index(k)]] = out.get(S.units[T.units.index(k)], F.zero) + c
                continue
            col = pos[k]
            for r in range(len(src_idx)):
                x = Minv[r, col]
                if x != 0:
                    sp.add_into(out, {src_idx[r]: x * c})
        return sp.clean(out)

    cap = f.cap
    g = AInftyMorphism(T, S, {1: {(k,): f1_inv({k: F.one}) for k in tgt_idx}}, cap=cap, name="inv")
    for n in range(2, cap + 1):
        table = {}
        for tup in T.tuples(n):
            degs = [T.deg[k] for k in tup]
            rest = {}
            for sizes in compositions(n):
                if len(sizes) == 1:
                    continue
                vecs, pos = [], 0
                for j in sizes:
                    vecs.append(g.f(j, tup[pos:pos + j]))
                    pos += j
                if any(not v for v in vecs):
                    continue
                sign = _comp_sign(sizes) * _tensor_apply_blocks(None, None, degs, sizes, lambda j: 1 - j)
                sp.add_into(rest, f.f_vec(len(sizes), vecs), sign)
            if rest:
                val = sp.scale(f1_inv(rest), -1)
                if val:
                    table[tup] = val
        g.comps[n] = table
    return g


# ----------------------------------------------------------------------------
# homotopy transfer

class _BarEngine:
    """Tensor-trick perturbation on words of homogeneous sparse vectors of C."""

    def __init__(self, C: DGEnd, K: Contraction):
        self.C, self.K = C, K
        self._ip = {}

    def b2(self, u, du, v, dv):
        # b_2(su, sv) = (-1)^{|u|+1} s(u v)
        return sp.scale(self.C.mu_vec(u, v), sgn(du + 1))

    def hbar(self, x):
        return sp.scale(self.K.h_vec(x), -1)

    def ip(self, x):
        return self.K.i_vec(self.K.p_vec(x))

    def delta(self, words):
        out = []
        for c, vecs, degs in words:
            sign = 1
            for k in range(len(vecs) - 1):
                v = self.b2(vecs[k], degs[k], vecs[k + 1], degs[k + 1])
                if v:
                    out.append((c * sign, vecs[:k] + [v] + vecs[k + 2:],
                                degs[:k] + [degs[k] + degs[k + 1]] + degs[k + 2:]))
                sign *= sgn(degs[k] + 1)
        return out

    def H(self, words):
        out = []
        for c, vecs, degs in words:
            ips = [None] * len(vecs)
            sign = 1
            for k in range(len(vecs)):
                hv = self.hbar(vecs[k])
                if hv:
                    tail = []
                    ok = True
                    for l in range(k + 1, len(vecs)):
                        if ips[l] is None:
                            ips[l] = self.ip(vecs[l])
                        if not ips[l]:
                            ok = False
                            break
                        tail.append(ips[l])
                    if ok:
                        out.append((c * sign, vecs[:k] + [hv] + tail,
                                    degs[:k] + [degs[k] - 1] + degs[k + 1:]))
                sign *= sgn(degs[k] + 1)
        return out

    @staticmethod
    def collapse(words, apply=None):
        out = {}
        for c, vecs, _ in words:
            v = vecs[0] if apply is None else apply(vecs[0])
            sp.add_into(out, v, c)
        return out


class Transfer:
    """Minimal model of a DGEnd with the quasi-isomorphisms i: H -> C and p: C -> H."""

    def __init__(self, C: DGEnd, cap: int | None = None, K: Contraction | None = None):
        self.C = C
        self.K = K or Contraction(C)
        self.cap = cap or (C.n_obj + 2)
        self.engine = _BarEngine(C, self.K)
        K = self.K
        F = C.field
        deg = [n for (_, _, n, _) in K.h_basis]
        tgt = [j for (j, _, _, _) in K.h_basis]
        src = [i for (_, i, _, _) in K.h_basis]
        units = [K.unit_index(i) for i in range(C.n_obj)]
        names = []
        counter = {}
        for (j, i, n, _) in K.h_basis:
            key = (j, i, n)
            counter[key] = counter.get(key, 0) + 1
            names.append(f"1_{i + 1}" if (j == i and n == 0 and counter[key] == 1)
                         else f"E{n}[{i + 1}->{j + 1}]#{counter[key]}")
        self.model = AInftyAlgebra(F, C.n_obj, deg, tgt, src, units, {}, self.cap, names)
        self._i_cache = {}
        M = self.model
        for n in range(2, self.cap + 1):
            table = {}
            for tup in M.tuples(n):
                v = self._m(tup)
                if v:
                    table[tup] = v
            M.ops[n] = table
        # beyond the cap everything must vanish
        extra = [t for t in M.tuples(self.cap + 1) if self._m(t)]
        if extra:
            raise CapTooSmall(f"transferred m_{self.cap + 1} does not vanish; raise the arity cap")
        self.view = DGAlgebraView(C)
        self.i_inf = AInftyMorphism(M, self.view, func=self._f_comp, cap=self.cap, name="i")
        one = F.one
        pv = PInfinity(self)
        self.p_inf = AInftyMorphism(
            self.view, M, cap=self.cap, name="p",
            func=lambda n, tup: pv.f_vecs([{k: one} for k in tup]),
            vec_func=lambda n, vecs: pv.f_vecs(vecs))

    def _words_I(self, tup):
        K = self.K
        return [(1, [K.i(k) for k in tup], [self.model.deg[k] for k in tup])]

    def _m(self, tup):
        E = self.engine
        words = E.delta(self._words_I(tup))
        for _ in range(len(tup) - 2):
            words = E.delta(E.H(words))
        vec = E.collapse(words, self.K.p_vec)
        return sp.scale(vec, _bar_sign([self.model.deg[k] for k in tup]))

    def _f_comp(self, n, tup):
        key = tup
        if key in self._i_cache:
            return self._i_cache[key]
        if n == 1:
            val = dict(self.K.i(tup[0]))
        else:
            E = self.engine
            words = self._words_I(tup)
            for _ in range(n - 1):
                words = E.H(E.delta(words))
            val = sp.scale(E.collapse(words), _bar_sign([self.model.deg[k] for k in tup]))
        self._i_cache[key] = val
        return val

    def bar_p(self, vecs, degs) -> dict:
        """Bar-side p_n on an elementary tensor of homogeneous vectors (values on sH)."""
        E = self.engine
        words = [(1, list(vecs), list(degs))]
        for _ in range(len(vecs) - 1):
            words = E.delta(E.H(words))
        return E.collapse(words, self.K.p_vec)


class PInfinity:
    """The projection quasi-isomorphism C -> H, evaluated on vectors."""

    def __init__(self, tr: Transfer):
        self.tr = tr

    def f_vecs(self, vecs) -> dict:
        if any(not v for v in vecs):
            return {}
        degs = [self.tr.C.deg[next(iter(v))] for v in vecs]
        if len(vecs) == 1:
            return self.tr.K.p_vec(vecs[0])
        return sp.scale(self.tr.bar_p(vecs, degs), _bar_sign(degs))


def homotopy_transfer(C: DGEnd, cap: int | None = None) -> Transfer:
    return Transfer(C, cap)


# ----------------------------------------------------------------------------
# truncation and triangle completion

def truncate(A: AInftyAlgebra) -> AInftyAlgebra:
    """L + A^{>0}: drops non-unit elements of degree <= 0."""
    keep = [k for k in range(A.dim) if A.is_unit(k) or A.deg[k] > 0]
    if len(keep) == A.dim:
        return A
    new = {k: r for r, k in enumerate(keep)}
    ops = {}
    for n, table in A.ops.items():
        t2 = {}
        for tup, vec in table.items():
            if all(k in new for k in tup):
                out = {}
                for k, c in vec.items():
                    if k not in new:
                        raise AInftyError("truncation is not closed under the operations")
                    out[new[k]] = c
                if out:
                    t2[tuple(new[k] for k in tup)] = out
        ops[n] = t2
    T = AInftyAlgebra(A.field, A.n_obj, [A.deg[k] for k in keep], [A.tgt[k] for k in keep],
                      [A.src[k] for k in keep], [new[u] for u in A.units], ops, A.cap,
                      [A.names[k] for k in keep])
    T.parent = A
    T.parent_index = keep
    return T


def truncate_morphism(f: AInftyMorphism, target_trunc: AInftyAlgebra) -> AInftyMorphism:
    """The unique factorisation of f: B -> A through trunc(A) (B coconnected)."""
    S = f.source
    if not (isinstance(S, AInftyAlgebra) and S.is_coconnected()):
        raise AInftyError("source must be coconnected")
    keep = getattr(target_trunc, "parent_index", list(range(target_trunc.dim)))
    new = {k: r for r, k in enumerate(keep)}
    comps = {}
    for n in range(1, f.cap + 1):
        t2 = {}
        for tup in S.tuples(n):
            vec = f.f(n, tup)
            out = {}
            for k, c in vec.items():
                if k not in new:
                    raise AInftyError("morphism leaves L + positive part")
                out[new[k]] = c
            if out:
                t2[tup] = out
        comps[n] = t2
    return AInftyMorphism(S, target_trunc, comps, cap=f.cap, name=f.name)


def complete_triangle(f: AInftyMorphism, fp: AInftyMorphism) -> AInftyMorphism:
    """g: B' -> B with f o g = f', for f: B -> A, f': B' -> A, B and B' coconnected
    and f_1 bijective onto the positive part of A."""
    if f.target is not fp.target:
        raise AInftyError("complete_triangle: maps must share their target")
    A = f.target
    At = truncate(A)
    h = truncate_morphism(f, At)
    hp = truncate_morphism(fp, At)
    g = compose(invert(h), hp)
    g.name = "g"
    fg = compose(f, g)
    for n in range(1, g.cap + 1):
        for tup in g.source.tuples(n):
            if fg.f(n, tup) != fp.f(n, tup):
                raise AInftyError("complete_triangle: f o g != f'")
    return g


def morphisms_equal(f: AInftyMorphism, g: AInftyMorphism, up_to: int | None = None) -> bool:
    up_to = up_to or min(f.cap, g.cap)
    for n in range(1, up_to + 1):
        for tup in f.source.tuples(n):
            if sp.clean(f.f(n, tup)) != sp.clean(g.f(n, tup)):
                return False
    return True


# ----------------------------------------------------------------------------
# models of Ext algebras

class ExtModel:
    """Minimal model of Ext*(M, M) for a list of modules, with its End complex."""

    def __init__(self, modules, cap: int | None = None, complexes=None, max_len: int = 12):
        from .endcomplex import ProjComplex
        from .modules import minimal_projective_resolution
        self.modules = list(modules)
        if complexes is None:
            complexes = [ProjComplex.from_resolution(minimal_projective_resolution(M, max_len)) for M in modules]
        self.C = DGEnd(complexes)
        self.transfer = Transfer(self.C, cap)
        self.model = self.transfer.model
        self.i_inf = self.transfer.i_inf
        self.p_inf = self.transfer.p_inf


def minimal_model_of_ext(modules, cap: int | None = None) -> ExtModel:
    return ExtModel(modules, cap)


def yoneda_product(C: DGEnd, x: dict, y: dict) -> dict:
    """Product of cocycle representatives (x o y); composition of chain maps."""
    return C.mu_vec(x, y)


class InducedAInftyMap:
    """Ext*_B(M, M) -> Ext*_A(A (x)_B M, ...) as P_A o T o i_B, with T the strict induced dg map."""

    def __init__(self, emb, modules, cap: int | None = None):
        from .endcomplex import Inducer, InducedDGMap
        self.emb = emb
        self.ext_B = ExtModel(modules, cap)
        cap = self.ext_B.transfer.cap
        self.inducer = Inducer(emb)
        self.T = InducedDGMap(self.inducer, self.ext_B.C)
        CA = self.T.CA
        self.transfer_A = Transfer(CA, cap)
        self.model_A = self.transfer_A.model
        iB = self.ext_B.i_inf
        T = self.T
        strict = AInftyMorphism(self.ext_B.model, self.transfer_A.view,
                                func=lambda n, tup: T(iB.f(n, tup)), cap=cap, name="Ti")
        self.Ti = strict
        self.map = compose(self.transfer_A.p_inf, strict, cap)
        self.map.name = "F"

    def first_component_blocks(self):
        """{degree: matrix of F_1 on Ext^degree} in the models' bases (positive degrees)."""
        S, Tm = self.ext_B.model, self.model_A
        out = {}
        for n in sorted({S.deg[k] for k in S.positive()} | {Tm.deg[k] for k in Tm.positive()}):
            if n <= 0:
                continue
            src = [k for k in S.positive() if S.deg[k] == n]
            tgt = [k for k in Tm.positive() if Tm.deg[k] == n]
            out[n] = self.map.first_matrix(src, tgt)
        return out


def induced_ainfty_map(emb, modules, cap: int | None = None) -> InducedAInftyMap:
    from .modules import is_induction_exact
    if not is_induction_exact(emb):
        raise AInftyError("induction along the embedding is not exact")
    return InducedAInftyMap(emb, modules, cap)
