"""Finite-dimensional algebras: bound quiver algebras, structure-constant
algebras, subalgebras, radicals and endomorphism algebras of projectives.

Conventions.  Paths are written right-to-left: the path ``y2*x1`` means
"first x1, then y2".  A path is stored as ``(target, source, arrows)`` where
``arrows`` lists arrow indices in written order.  Every algebra carries a
complete set of primitive orthogonal idempotents and a *Peirce tag*
``(t, s)`` for each basis vector b, meaning ``b = e_t b e_s``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

import flint

from . import linalg as la
from .linalg import Field


class AlgebraError(Exception):
    """Raised for non-split, non-admissible or otherwise unusable input."""


@dataclass(frozen=True)
class Quiver:
    """Vertices 1..n and named arrows (source, target, name)."""

    n: int
    arrows: tuple = ()

    def __post_init__(self):
        names = [a[2] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be unique")
        for s, t, name in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise AlgebraError(f"arrow {name} has an endpoint outside 1..{self.n}")

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a[2] == name:
                return k
        raise AlgebraError(f"unknown arrow {name!r}")

    def path_from_names(self, names) -> tuple:
        """Path tuple for a right-to-left list of arrow names (or a vertex name 'e<i>')."""
        names = list(names)
        if len(names) == 1 and names[0].startswith("e") and names[0][1:].isdigit() \
                and names[0] not in [a[2] for a in self.arrows]:
            v = int(names[0][1:])
            return (v, v, ())
        idx = tuple(self.arrow_index(x) for x in names)
        if not idx:
            raise AlgebraError("empty path")
        for left, right in zip(idx, idx[1:]):
            if self.arrows[left][0] != self.arrows[right][1]:
                raise AlgebraError(f"path {'*'.join(names)} is not composable")
        return (self.arrows[idx[0]][1], self.arrows[idx[-1]][0], idx)

    def path_name(self, path) -> str:
        t, s, arr = path
        if not arr:
            return f"e{t}"
        return "*".join(self.arrows[k][2] for k in arr)

    def is_acyclic(self) -> bool:
        import networkx as nx
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        for s, t, _ in self.arrows:
            if s == t:
                return False
            g.add_edge(s, t)
        return nx.is_directed_acyclic_graph(g)


def _concat(q: Quiver, p, r):
    """p*r (r first) or None."""
    if p[1] != r[0]:
        return None
    return (p[0], r[1], p[2] + r[2])


class FinDimAlgebra:
    """A finite-dimensional algebra given by structure constants.

    ``table[i][j]`` is a sparse dict ``{k: c}`` for the product b_i b_j.
    Elements are python lists of field scalars of length ``dim``.
    """

    def __init__(self, field: Field, names, table, unit, idempotents, tags,
                 quiver: Quiver | None = None, paths=None, arrow_indices=None):
        self.field = field
        self.names = list(names)
        self.dim = len(self.names)
        self.table = table
        self.unit = list(unit)
        self.idempotents = [list(e) for e in idempotents]
        self.tags = list(tags)
        self.quiver = quiver
        self.paths = paths
        self.arrow_indices = arrow_indices
        self._cache = {}

    # basic element handling
    def zero(self):
        return [self.field.zero] * self.dim

    def basis(self, i: int):
        v = self.zero()
        v[i] = self.field.one
        return v

    def element(self, coeffs: dict):
        """Element from {basis name or index: scalar}."""
        v = self.zero()
        for key, c in coeffs.items():
            i = key if isinstance(key, int) else self.names.index(key)
            v[i] += self.field(c)
        return v

    def index(self, name: str) -> int:
        return self.names.index(name)

    @property
    def n_vertices(self) -> int:
        return len(self.idempotents)

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def scale(self, c, x):
        c = self.field(c)
        return [c * a for a in x]

    def mul(self, x, y):
        out = self.zero()
        ynz = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in ynz:
                for k, c in row[j].items():
                    out[k] += a * b * c
        return out

    def mul_basis(self, i: int, j: int):
        out = self.zero()
        for k, c in self.table[i][j].items():
            out[k] = c
        return out

    def is_zero(self, x) -> bool:
        return all(a == 0 for a in x)

    # multiplication matrices
    def left_matrix(self, x):
        F = self.field
        m = F.zeros(self.dim, self.dim)
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.table[i]
            for j in range(self.dim):
                for k, c in row[j].items():
                    m[k, j] += a * c
        return m

    def right_matrix(self, x):
        F = self.field
        m = F.zeros(self.dim, self.dim)
        for j, a in enumerate(x):
            if a == 0:
                continue
            for i in range(self.dim):
                for k, c in self.table[i][j].items():
                    m[k, i] += a * c
        return m

    def left_mats(self):
        if "L" not in self._cache:
            self._cache["L"] = [self.left_matrix(self.basis(i)) for i in range(self.dim)]
        return self._cache["L"]

    def right_mats(self):
        if "R" not in self._cache:
            self._cache["R"] = [self.right_matrix(self.basis(i)) for i in range(self.dim)]
        return self._cache["R"]

    # Peirce structure
    def peirce_indices(self, tgt=None, src=None):
        return [k for k, (t, s) in enumerate(self.tags)
                if (tgt is None or t == tgt) and (src is None or s == src)]

    def vertex_of_idempotent_index(self):
        """Index of the basis vector equal to e_v, when idempotents are basis vectors."""
        out = []
        for e in self.idempotents:
            nz = [k for k, a in enumerate(e) if a != 0]
            out.append(nz[0] if len(nz) == 1 and e[nz[0]] == 1 else None)
        return out

    # checks
    def check_associative(self) -> bool:
        for i in range(self.dim):
            for j in range(self.dim):
                if not self.table[i][j]:
                    continue
                for k in range(self.dim):
                    left = self.mul(self.mul_basis(i, j), self.basis(k))
                    right = self.mul(self.basis(i), self.mul_basis(j, k))
                    if left != right:
                        return False
        return True

    def check_unit(self) -> bool:
        return all(self.mul(self.unit, self.basis(i)) == self.basis(i)
                   and self.mul(self.basis(i), self.unit) == self.basis(i)
                   for i in range(self.dim))

    def check_idempotents(self) -> bool:
        total = self.zero()
        for a, e in enumerate(self.idempotents):
            if self.is_zero(e):
                return False
            for b, f in enumerate(self.idempotents):
                prod = self.mul(e, f)
                if a == b and prod != e:
                    return False
                if a != b and not self.is_zero(prod):
                    return False
            total = self.add(total, e)
        return total == self.unit

    # local structure, radical, iso classes
    def _residues(self):
        """Residue functional of each local corner algebra e_v A e_v (as dict index -> scalar)."""
        if "res" in self._cache:
            return self._cache["res"]
        res = []
        for v, e in enumerate(self.idempotents):
            idx = self.peirce_indices(v, v)
            L = self.left_mats()
            phi = {}
            for k in idx:
                M = la.submatrix(L[k], idx, idx)
                phi[k] = _single_eigenvalue(M, self.field)
            # e_v itself must have residue 1
            val = sum((phi[k] * e[k] for k in idx), self.field.zero)
            if val != 1:
                raise AlgebraError("idempotent residue is not 1: corner algebra is not local")
            res.append(phi)
        self._cache["res"] = res
        return res

    def residue(self, v: int, x) -> object:
        phi = self._residues()[v]
        return sum((phi[k] * x[k] for k in phi), self.field.zero)

    def radical(self):
        """Basis (columns, Peirce-adapted) of the Jacobson radical."""
        if "rad" in self._cache:
            return self._cache["rad"]
        F = self.field
        cols = []
        res = self._residues()
        n = self.n_vertices
        for t in range(n):
            for s in range(n):
                idx = self.peirce_indices(t, s)
                if not idx:
                    continue
                back = self.peirce_indices(s, t)
                # x in e_t A e_s is radical iff residue_t(x y) = 0 for all y in e_s A e_t
                rows = []
                for k2 in back:
                    rows.append([self.residue(t, self.mul_basis(k1, k2)) for k1 in idx])
                if rows:
                    K = la.kernel(F.matrix(rows, len(idx)))
                else:
                    K = F.identity(len(idx))
                for c in range(K.ncols()):
                    v = self.zero()
                    for a, k1 in enumerate(idx):
                        v[k1] = K[a, c]
                    cols.append(v)
        rad = la.hstack([F.zeros(self.dim, 0)] + [F.column(v) for v in cols]) if cols else F.zeros(self.dim, 0)
        self._check_nilpotent(rad)
        self._cache["rad"] = rad
        return rad

    def _check_nilpotent(self, rad):
        F = self.field
        cur = rad
        for _ in range(self.dim + 1):
            if cur.ncols() == 0:
                return
            prods = []
            for a in range(rad.ncols()):
                x = la.col(rad, a)
                Lx = self.left_matrix(x)
                prods.append(Lx * cur)
            cur = la.column_space(la.hstack(prods))
        raise AlgebraError("computed radical is not nilpotent (idempotents not primitive?)")

    def radical_power(self, k: int):
        F = self.field
        if k == 0:
            return F.identity(self.dim)
        rad = self.radical()
        cur = rad
        for _ in range(k - 1):
            if cur.ncols() == 0:
                break
            prods = [self.left_matrix(la.col(rad, a)) * cur for a in range(rad.ncols())]
            cur = la.column_space(la.hstack(prods))
        return cur

    def iso_classes(self):
        """Partition of the idempotent indices into isomorphism classes of projectives."""
        if "classes" in self._cache:
            return self._cache["classes"]
        n = self.n_vertices
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a
        for t in range(n):
            for s in range(t + 1, n):
                idx = self.peirce_indices(t, s)
                back = self.peirce_indices(s, t)
                if any(self.residue(t, self.mul_basis(a, b)) != 0 for a in idx for b in back):
                    parent[find(s)] = find(t)
        groups = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        classes = sorted(groups.values())
        self._cache["classes"] = classes
        return classes

    def is_basic(self) -> bool:
        return all(len(c) == 1 for c in self.iso_classes())

    def generators(self):
        """Idempotents plus Peirce-homogeneous elements spanning rad modulo rad^2."""
        if "gens" in self._cache:
            return self._cache["gens"]
        F = self.field
        if self.arrow_indices is not None:
            gens = [list(e) for e in self.idempotents] + [self.basis(k) for k in self.arrow_indices]
        else:
            rad = self.radical()
            rad2 = self.radical_power(2)
            gens = [list(e) for e in self.idempotents]
            comp = la.complement(rad2, rad)
            for c in range(comp.ncols()):
                gens.append(la.col(comp, c))
        self._cache["gens"] = gens
        return gens

    def is_invertible(self, x) -> bool:
        return la.is_invertible_matrix(self.left_matrix(x))

    def inverse(self, x):
        M = self.left_matrix(x)
        if not la.is_invertible_matrix(M):
            raise AlgebraError("element is not invertible")
        sol = la.solve(M, self.field.column(self.unit))
        return la.col(sol, 0)

    def name_of(self, x) -> str:
        terms = []
        for k, a in enumerate(x):
            if a == 0:
                continue
            s = self.field.to_str(a)
            terms.append(self.names[k] if s == "1" else ("-" + self.names[k] if s == "-1" else f"{s}*{self.names[k]}"))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, vertices={self.n_vertices}, field={self.field.name})"


def _single_eigenvalue(M, F: Field):
    """The unique eigenvalue of M; AlgebraError if there are several or none in the field."""
    n = M.nrows()
    if n == 0:
        raise AlgebraError("empty corner algebra")
    cp = M.charpoly()
    if F.p:
        content, facs = cp.factor()
    else:
        content, facs = cp.factor()
    if len(facs) != 1 or facs[0][0].degree() != 1:
        raise AlgebraError("corner algebra is not split local (residue field check failed)")
    f = facs[0][0]
    c = f.coeffs()
    return F(-F(c[0]) / F(c[1]))


# ----------------------------------------------------------------------------
# bound quiver algebras

def _paths_up_to(q: Quiver, N: int):
    paths = [(v, v, ()) for v in range(1, q.n + 1)]
    layer = [(t, s, (k,)) for k, (s, t, _) in enumerate(q.arrows)]
    length = 1
    while layer and length <= N:
        paths.extend(layer)
        nxt = []
        for p in layer:
            for k, (s, t, _) in enumerate(q.arrows):
                if s == p[0]:
                    nxt.append((t, p[1], (k,) + p[2]))
        layer = nxt
        length += 1
    return paths


def _path_key(p):
    return (len(p[2]), p[2], p[0], p[1]) if p[2] else (0, (), p[0], p[1])


MAX_PATHS = 20000


def build_path_algebra(q: Quiver, relations, field: Field | None = None, max_length: int = 40) -> FinDimAlgebra:
    """kQ/I for relations given as lists of (coefficient, path-tuple).

    Returns the algebra on the standard monomials (residue paths that are not
    leading terms of the ideal).  Raises AlgebraError if the quotient does not
    become finite-dimensional within ``max_length``.
    """
    F = field or Field(0)
    rels = []
    for rel in relations:
        terms = [(F(c), tuple(p)) for c, p in rel if F(c) != 0]
        if not terms:
            continue
        ends = {(p[0], p[1]) for _, p in terms}
        if len(ends) != 1:
            raise AlgebraError("relation mixes paths with different endpoints")
        if any(len(p[2]) < 2 for _, p in terms):
            raise AlgebraError("relation is not contained in the square of the arrow ideal")
        rels.append(terms)
    N = 2 if rels else 1
    if not rels:
        # no relations: finite iff acyclic
        if not q.is_acyclic():
            raise AlgebraError("path algebra of a quiver with oriented cycles is infinite-dimensional")
        N = q.n + 1
    while True:
        if N > max_length:
            raise AlgebraError("quotient did not stabilise: ideal not admissible or path bound exceeded")
        paths = _paths_up_to(q, N)
        if len(paths) > MAX_PATHS:
            raise AlgebraError(f"more than {MAX_PATHS} paths below length {N}; input out of scope")
        order = sorted(paths, key=_path_key, reverse=True)  # largest first
        pos = {p: i for i, p in enumerate(order)}
        rows = []
        by_len = {}
        for p in paths:
            by_len.setdefault(len(p[2]), []).append(p)
        for terms in rels:
            minlen = min(len(p[2]) for _, p in terms)
            for a in range(0, N - minlen + 1):
                for b in range(0, N - minlen - a + 1):
                    lefts = by_len.get(a, [])
                    rights = by_len.get(b, [])
                    for lp in lefts:
                        if lp[1] != terms[0][1][0]:
                            continue
                        for rp in rights:
                            if rp[0] != terms[0][1][1]:
                                continue
                            row = {}
                            for c, p in terms:
                                full = (lp[0], rp[1], lp[2] + p[2] + rp[2])
                                if len(full[2]) <= N:
                                    row[pos[full]] = row.get(pos[full], F.zero) + c
                            if any(v != 0 for v in row.values()):
                                rows.append(row)
        M = F.zeros(len(rows), len(order))
        for r, row in enumerate(rows):
            for c, v in row.items():
                M[r, c] = v
        red, pivots, rk = la.rref(M)
        pivset = set(pivots)
        top = [p for p in paths if len(p[2]) == N]
        if all(pos[p] in pivset for p in top):
            break
        N += 1
    # standard monomials of length < N
    basis_paths = sorted([p for p in paths if pos[p] not in pivset and len(p[2]) < N], key=_path_key)
    bindex = {p: i for i, p in enumerate(basis_paths)}
    pivrow = {pc: r for r, pc in enumerate(pivots)}

    def normal_form(p):
        """Sparse {basis index: coef} for a path of any length."""
        if len(p[2]) >= N:
            return {}
        if p in bindex:
            return {bindex[p]: F.one}
        r = pivrow[pos[p]]
        out = {}
        for c in range(len(order)):
            if c in pivset:
                continue
            v = red[r, c]
            if v != 0:
                out[bindex[order[c]]] = -v
        return out

    dim = len(basis_paths)
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, p in enumerate(basis_paths):
        for j, r in enumerate(basis_paths):
            c = _concat(q, p, r)
            if c is not None:
                table[i][j] = normal_form(c)
    names = [q.path_name(p) for p in basis_paths]
    unit = [F.zero] * dim
    idems = []
    for v in range(1, q.n + 1):
        e = [F.zero] * dim
        e[bindex[(v, v, ())]] = F.one
        unit[bindex[(v, v, ())]] = F.one
        idems.append(e)
    tags = [(p[0] - 1, p[1] - 1) for p in basis_paths]
    arrows = [bindex[(t, s, (k,))] for k, (s, t, _) in enumerate(q.arrows) if (t, s, (k,)) in bindex]
    A = FinDimAlgebra(F, names, table, unit, idems, tags, quiver=q, paths=basis_paths, arrow_indices=arrows)
    A.path_normal_form = normal_form
    return A


def path_element(A: FinDimAlgebra, names) -> list:
    """Algebra element of a right-to-left arrow-name path (reduced)."""
    p = A.quiver.path_from_names(names)
    v = A.zero()
    for k, c in A.path_normal_form(p).items():
        v[k] = c
    return v


# ----------------------------------------------------------------------------
# algebras from structure constants

def algebra_from_products(field: Field, vectors_mul, dim: int, unit, names=None, rng=None) -> FinDimAlgebra:
    """Algebra with product ``vectors_mul(i, j) -> vector`` on basis indices.

    Finds primitive idempotents and rebases to a Peirce-adapted basis.
    """
    table = [[{k: c for k, c in enumerate(vectors_mul(i, j)) if c != 0} for j in range(dim)] for i in range(dim)]
    names = names or [f"b{i}" for i in range(dim)]
    raw = FinDimAlgebra(field, names, table, unit, [unit], [(0, 0)] * dim)
    idems = primitive_idempotents(raw, rng or random.Random(0))
    return rebase_peirce(raw, idems)[0]


def primitive_idempotents(A: FinDimAlgebra, rng: random.Random, tries: int = 60):
    """Complete set of primitive orthogonal idempotents, found by splitting with random elements."""
    F = A.field

    def corner_basis(e):
        Le, Re = A.left_matrix(e), A.right_matrix(e)
        return la.column_space(Le * Re)

    def split(e):
        B = corner_basis(e)
        d = B.ncols()
        if d == 1:
            return [e]
        for _ in range(tries):
            coeffs = [F.random_scalar(rng, -3, 3) for _ in range(d)]
            x = la.col(B * F.column(coeffs), 0)
            M = la.coordinates(B, A.left_matrix(x) * B)
            mp = M.minpoly()
            content, facs = mp.factor()
            if len(facs) < 2:
                continue
            parts = [f ** m for f, m in facs]
            out = []
            for i, fi in enumerate(parts):
                gi = _poly_one(F)
                for j, fj in enumerate(parts):
                    if j != i:
                        gi = gi * fj
                g, s, t = _xgcd(fi, gi, F)
                ui = t * gi
                ei = _poly_eval(A, ui, x, e, F)
                out.extend(split(ei))
            return out
        # no splitting element found: accept if local, else non-split
        _assert_local(A, e, B)
        return [e]

    idems = split(list(A.unit))
    return idems


def _poly_one(F):
    return flint.nmod_poly([1], F.p) if F.p else flint.fmpq_poly([1])


def _xgcd(a, b, F):
    if F.p:
        g, s, t = a.xgcd(b)
    else:
        a = flint.fmpq_poly(a.coeffs()) if not isinstance(a, flint.fmpq_poly) else a
        b = flint.fmpq_poly(b.coeffs()) if not isinstance(b, flint.fmpq_poly) else b
        g, s, t = a.xgcd(b)
    lead = g.coeffs()[-1]
    return g, s / lead if not F.p else s * (flint.nmod(1, F.p) / lead), t / lead if not F.p else t * (flint.nmod(1, F.p) / lead)


def _poly_eval(A, poly, x, e, F):
    coeffs = [F(c) for c in poly.coeffs()]
    out = A.zero()
    for c in reversed(coeffs):
        out = A.add(A.mul(out, x), A.scale(c, e))
    return out


def _assert_local(A, e, B):
    F = A.field
    d = B.ncols()
    # every basis element of eAe must have a single eigenvalue and the kernel of
    # the residue map must be nilpotent
    phis = []
    for c in range(d):
        x = la.col(B, c)
        M = la.coordinates(B, A.left_matrix(x) * B)
        phis.append(_single_eigenvalue(M, F))
    ecoord = la.col(la.coordinates(B, F.column(e)), 0)
    rad_vecs = []
    for c in range(d):
        v = [phis[c] * a for a in ecoord]
        x = la.col(B, c)
        rad_vecs.append(A.sub(x, la.col(B * F.column(v), 0)))
    R = la.column_space(la.hstack([F.column(v) for v in rad_vecs]))
    cur = R
    for _ in range(d + 1):
        if cur.ncols() == 0:
            return
        cur = la.column_space(la.hstack([A.left_matrix(la.col(R, a)) * cur for a in range(R.ncols())]))
    raise AlgebraError("algebra is not split: a corner algebra has a non-split semisimple quotient")


def rebase_peirce(A: FinDimAlgebra, idems):
    """Re-express A in a basis adapted to the idempotents (e_v first in its corner).

    Returns (new algebra, change-of-basis matrix old_coords = T * new_coords).
    """
    F = A.field
    n = len(idems)
    cols, tags, names = [], [], []
    for t in range(n):
        for s in range(n):
            P = A.left_matrix(idems[t]) * A.right_matrix(idems[s])
            space = la.column_space(P)
            if t == s:
                ecol = F.column(idems[t])
                comp = la.complement(ecol, space)
                space = la.hstack([ecol, comp])
            for c in range(space.ncols()):
                cols.append(la.col(space, c))
                tags.append((t, s))
                names.append(f"b{t + 1}{s + 1}_{c}" if not (t == s and c == 0) else f"e{t + 1}")
    T = la.hstack([F.column(v) for v in cols])
    if T.ncols() != A.dim or la.rank(T) != A.dim:
        raise AlgebraError("idempotents are not complete")
    Tinv = T.inv()
    dim = A.dim
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if tags[i][1] != tags[j][0]:
                continue
            prod = A.mul(cols[i], cols[j])
            if A.is_zero(prod):
                continue
            coords = la.col(Tinv * F.column(prod), 0)
            table[i][j] = {k: c for k, c in enumerate(coords) if c != 0}
    unit = la.col(Tinv * F.column(A.unit), 0)
    new_idems = [la.col(Tinv * F.column(e), 0) for e in idems]
    B = FinDimAlgebra(F, names, table, unit, new_idems, tags)
    return B, T


def opposite(A: FinDimAlgebra) -> FinDimAlgebra:
    table = [[dict(A.table[j][i]) for j in range(A.dim)] for i in range(A.dim)]
    tags = [(s, t) for t, s in A.tags]
    return FinDimAlgebra(A.field, A.names, table, A.unit, A.idempotents, tags)


def semisimple(field: Field, n: int) -> FinDimAlgebra:
    """L = k^n."""
    return build_path_algebra(Quiver(n, ()), [], field)


# ----------------------------------------------------------------------------
# embeddings and closures

class SubalgebraEmbedding:
    """An injective algebra map ``sub -> amb`` given by a matrix (amb.dim x sub.dim)."""

    def __init__(self, sub: FinDimAlgebra, amb: FinDimAlgebra, matrix, check: bool = True, name: str = ""):
        self.sub = sub
        self.amb = amb
        self.matrix = matrix
        self.name = name
        if check:
            self.verify()

    def __call__(self, x):
        return la.col(self.matrix * self.sub.field.column(x), 0)

    def image_basis(self):
        return la.column_space(self.matrix)

    def verify(self):
        A, B = self.amb, self.sub
        if la.rank(self.matrix) != B.dim:
            raise AlgebraError("embedding is not injective")
        if self(B.unit) != A.unit:
            raise AlgebraError("embedding is not unital")
        imgs = [self(B.basis(i)) for i in range(B.dim)]
        for i in range(B.dim):
            for j in range(B.dim):
                if self(B.mul_basis(i, j)) != A.mul(imgs[i], imgs[j]):
                    raise AlgebraError("embedding is not multiplicative")

    def preimage(self, x):
        sol = la.solve(self.matrix, self.sub.field.column(x))
        if sol is None:
            raise AlgebraError("element not in the image of the embedding")
        return la.col(sol, 0)

    def conjugate(self, u, uinv=None, name: str = "") -> "SubalgebraEmbedding":
        """The embedding b -> u iota(b) u^{-1}."""
        A = self.amb
        uinv = uinv if uinv is not None else A.inverse(u)
        M = A.left_matrix(u) * A.right_matrix(uinv) * self.matrix
        return SubalgebraEmbedding(self.sub, A, M, check=True, name=name)

    def compose_automorphism(self, g_matrix, name: str = "") -> "SubalgebraEmbedding":
        """b -> g(iota(b)) for an automorphism of the ambient algebra."""
        return SubalgebraEmbedding(self.sub, self.amb, g_matrix * self.matrix, check=True, name=name)


def embedding_from_generators(sub: FinDimAlgebra, amb: FinDimAlgebra, images: dict, name: str = "") -> SubalgebraEmbedding:
    """Embedding of a path algebra determined by images of vertices and arrows.

    ``images`` maps vertex idempotent names ('e1', ...) and arrow names to amb elements.
    """
    q = sub.quiver
    if q is None:
        raise AlgebraError("embedding_from_generators needs a path algebra as source")
    F = sub.field
    cols = []
    for p in sub.paths:
        t, s, arr = p
        if not arr:
            img = images[f"e{t}"]
        else:
            img = list(images[q.arrows[arr[-1]][2]])
            for k in reversed(arr[:-1]):
                img = amb.mul(images[q.arrows[k][2]], img)
        cols.append(F.column(img))
    M = la.hstack(cols)
    return SubalgebraEmbedding(sub, amb, M, check=True, name=name)


def subalgebra_closure(A: FinDimAlgebra, gens, rng=None) -> SubalgebraEmbedding:
    """Smallest unital subalgebra containing ``gens``."""
    F = A.field
    S = la.column_space(la.hstack([F.column(A.unit)] + [F.column(g) for g in gens]))
    while True:
        vecs = [la.col(S, c) for c in range(S.ncols())]
        prods = [F.column(A.mul(x, y)) for x in vecs for y in vecs]
        S2 = la.column_space(la.hstack([S] + prods))
        if S2.ncols() == S.ncols():
            break
        if S2.ncols() > A.dim:
            raise AssertionError("closure exceeded ambient dimension")
        S = S2
    d = S.ncols()
    vecs = [la.col(S, c) for c in range(d)]

    def prod(i, j):
        return la.col(la.coordinates(S, F.column(A.mul(vecs[i], vecs[j]))), 0)
    unit = la.col(la.coordinates(S, F.column(A.unit)), 0)
    table = [[{k: c for k, c in enumerate(prod(i, j)) if c != 0} for j in range(d)] for i in range(d)]
    raw = FinDimAlgebra(F, [f"s{i}" for i in range(d)], table, unit, [unit], [(0, 0)] * d)
    idems = primitive_idempotents(raw, rng or random.Random(0))
    idems = _order_idempotents(raw, idems)
    B, T = rebase_peirce(raw, idems)
    return SubalgebraEmbedding(B, A, S * T)


def _order_idempotents(A, idems):
    # deterministic order: by the position of the first nonzero coordinate
    def key(e):
        return [(-1 if a != 0 else 0) for a in e]
    return sorted(idems, key=key)


# ----------------------------------------------------------------------------
# endomorphism algebra of a sum of indecomposable projectives

def projective_endomorphism_algebra(A: FinDimAlgebra, vertices, labels=None) -> FinDimAlgebra:
    """End_A(Ae_{v_1} + ... + Ae_{v_m})^op with basis (s, t, p), p a basis vector of e_{v_s} A e_{v_t}.

    The basis element (s, t, p) is the map Ae_{v_s} -> Ae_{v_t}, x -> x p.  In the
    opposite algebra (s, t, p)(t, u, q) = (s, u, pq).  Vertices are 0-based.
    """
    F = A.field
    m = len(vertices)
    labels = labels or [f"P{v + 1}" for v in vertices]
    basis = []
    for s in range(m):
        for t in range(m):
            for k in A.peirce_indices(vertices[s], vertices[t]):
                basis.append((s, t, k))
    index = {b: i for i, b in enumerate(basis)}
    dim = len(basis)
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, (s, t, k) in enumerate(basis):
        for j, (t2, u, k2) in enumerate(basis):
            if t != t2:
                continue
            out = {}
            for kk, c in A.table[k][k2].items():
                out[index[(s, u, kk)]] = c
            table[i][j] = out
    unit = [F.zero] * dim
    idems = []
    vtx_idx = A.vertex_of_idempotent_index()
    for s in range(m):
        e = [F.zero] * dim
        k = vtx_idx[vertices[s]]
        if k is None:
            raise AlgebraError("vertex idempotents must be basis vectors")
        e[index[(s, s, k)]] = F.one
        unit[index[(s, s, k)]] = F.one
        idems.append(e)
    names = []
    for s, t, k in basis:
        names.append(f"id[{labels[s]}]" if s == t and k == vtx_idx[vertices[s]] and labels else f"{labels[s]}->{labels[t]}:{A.names[k]}")
    R = FinDimAlgebra(F, names, table, unit, idems, [(s, t) for s, t, _ in basis])
    R.proj_basis = basis
    R.proj_vertices = list(vertices)
    R.proj_labels = list(labels)
    R.proj_index = index
    R.base_algebra = A
    return R


def linear_map_char_poly(M):
    """Coefficient list (constant first) of the characteristic polynomial of a square matrix."""
    return la.charpoly_coeffs(M)


def format_poly_factored(M, var: str = "t") -> str:
    """Characteristic polynomial of M as a product of powers of irreducible factors."""
    F = la.field_of(M)
    if M.nrows() == 0:
        return "1"
    cp = M.charpoly()
    content, facs = cp.factor()
    parts = []
    for f, m in sorted(facs, key=lambda fm: [F.to_int_pair(F(c)) for c in fm[0].coeffs()]):
        coeffs = [F(c) for c in f.coeffs()]
        s = _poly_str(F, coeffs, var)
        parts.append(f"({s})" + (f"^{m}" if m > 1 else ""))
    return "*".join(parts)


def _poly_str(F, coeffs, var):
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        n, den = F.to_int_pair(c)
        if F.p and n > F.p // 2:
            n -= F.p
        cs = str(n) if den == 1 else f"{n}/{den}"
        if d == 0:
            terms.append(cs)
        else:
            mon = var if d == 1 else f"{var}^{d}"
            terms.append(mon if cs == "1" else ("-" + mon if cs == "-1" else f"{cs}*{mon}"))
    s = " + ".join(terms).replace("+ -", "- ")
    return s
