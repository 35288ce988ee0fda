"""JSON algebra descriptions: parsing, building, emitting, and the example generators.

A description is a UTF-8 JSON object::

    {
      "composition": "right-to-left",
      "field": "rational" | "fp:<p>",
      "quiver": {"vertices": n, "arrows": [{"name": .., "src": i, "tgt": j}, ..]},
      "relations": [[{"coefficient": "1", "path": ["y3", "x2"]}, ..], ..],
      "order": [[1, 2], ..],
      "projective_generator": {"vertices": [..], "labels": [..]},
      "subalgebras": {name: {"quiver": .., "relations": .., "images": {generator: element}}},
      "group": {"order": N, "images": {basis name: element}}
    }

Paths list arrow names left to right as written in a right-to-left product, so
``["y3", "x2"]`` is x2 followed by y3.  Vertices are 1-based.  Elements are
objects mapping basis names to coefficient strings.  With a projective
generator the working algebra is End(P)^op for P the listed sum of
indecomposable projectives; subalgebras and the group act on it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import linalg as la
from .algebra import (
    AlgebraError,
    FinDimAlgebra,
    Quiver,
    SubalgebraEmbedding,
    build_path_algebra,
    embedding_from_generators,
    projective_endomorphism_algebra,
)
from .examples import example_auslander, example_two_source, order_on_projective_algebra
from .linalg import Field
from .qh import SimpleOrder
from .skew import GroupAction, automorphism_from_images, cyclic_action, generating_basis_subset

COMPOSITION = "right-to-left"


class ParseError(Exception):
    """Malformed description; ``where`` is a JSON path or a line/column."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


# ----------------------------------------------------------------------------
# the description object

@dataclass
class QuiverSpec:
    vertices: int
    arrows: list            # (name, src, tgt), 1-based
    relations: list         # [[(coefficient str, [arrow names])]]

    def to_dict(self):
        return {
            "quiver": {"vertices": self.vertices,
                       "arrows": [{"name": n, "src": s, "tgt": t} for n, s, t in self.arrows]},
            "relations": [[{"coefficient": c, "path": list(p)} for c, p in rel] for rel in self.relations],
        }


@dataclass
class Description:
    field: str
    quiver: QuiverSpec
    order: list                                  # cover pairs, 1-based
    name: str = ""
    projective_generator: dict | None = None     # {"vertices": [...], "labels": [...]}
    subalgebras: dict = field(default_factory=dict)   # name -> (QuiverSpec, images)
    group: dict | None = None                    # {"order": N, "images": {...}}

    def to_dict(self):
        d = {"composition": COMPOSITION}
        if self.name:
            d["name"] = self.name
        d["field"] = self.field
        d.update(self.quiver.to_dict())
        d["order"] = [list(p) for p in self.order]
        if self.projective_generator:
            d["projective_generator"] = {"vertices": list(self.projective_generator["vertices"]),
                                         "labels": list(self.projective_generator["labels"])}
        if self.subalgebras:
            subs = {}
            for nm, (q, images) in self.subalgebras.items():
                e = q.to_dict()
                e["images"] = {g: dict(v) for g, v in images.items()}
                subs[nm] = e
            d["subalgebras"] = subs
        if self.group:
            d["group"] = {"order": self.group["order"],
                          "images": {g: dict(v) for g, v in self.group["images"].items()}}
        return d


def emit(desc: Description) -> str:
    return json.dumps(desc.to_dict(), indent=2, ensure_ascii=False) + "\n"


# ----------------------------------------------------------------------------
# parsing

def _req(d, key, where, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(f"missing key {key!r}", where)
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"{key!r} must be {kind.__name__ if isinstance(kind, type) else kind}", where)
    return v


def _coef_str(c, where):
    if isinstance(c, bool) or not isinstance(c, (int, str)):
        raise ParseError("coefficients must be integers or strings like '-3/2'", where)
    try:
        Field(0)(str(c))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {c!r}", where) from None
    return str(c)


def _parse_quiver(d, where) -> QuiverSpec:
    q = _req(d, "quiver", where, dict)
    n = _req(q, "vertices", where + ".quiver", int)
    if n < 1:
        raise ParseError("need at least one vertex", where + ".quiver.vertices")
    arrows = []
    for k, a in enumerate(_req(q, "arrows", where + ".quiver", list)):
        w = f"{where}.quiver.arrows[{k}]"
        nm = _req(a, "name", w, str)
        s = _req(a, "src", w, int)
        t = _req(a, "tgt", w, int)
        if not (1 <= s <= n and 1 <= t <= n):
            raise ParseError(f"arrow endpoint outside 1..{n}", w)
        arrows.append((nm, s, t))
    rels = []
    for k, rel in enumerate(d.get("relations", [])):
        w = f"{where}.relations[{k}]"
        if not isinstance(rel, list):
            raise ParseError("a relation is a list of terms", w)
        terms = []
        for m, term in enumerate(rel):
            wt = f"{w}[{m}]"
            c = _coef_str(_req(term, "coefficient", wt), wt + ".coefficient")
            p = _req(term, "path", wt, list)
            if not p or not all(isinstance(x, str) for x in p):
                raise ParseError("path must be a nonempty list of arrow names", wt + ".path")
            terms.append((c, list(p)))
        rels.append(terms)
    return QuiverSpec(n, arrows, rels)


def _parse_element(v, where):
    if not isinstance(v, dict):
        raise ParseError("an element is an object {basis name: coefficient}", where)
    return {str(k): _coef_str(c, f"{where}.{k}") for k, c in v.items()}


def parse(text_or_dict) -> Description:
    if isinstance(text_or_dict, str):
        try:
            d = json.loads(text_or_dict)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    else:
        d = text_or_dict
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    comp = d.get("composition")
    if comp != COMPOSITION:
        raise ParseError(f"header key 'composition' must be {COMPOSITION!r} (got {comp!r})", "composition")
    fld = _req(d, "field", "", str)
    try:
        Field.parse(fld)
    except ValueError as e:
        raise ParseError(str(e), "field") from None
    quiver = _parse_quiver(d, "")
    order = []
    for k, p in enumerate(d.get("order", [])):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)):
            raise ParseError("order entries are pairs [i, j] meaning i < j", f"order[{k}]")
        order.append((p[0], p[1]))
    gen = None
    if "projective_generator" in d:
        g = d["projective_generator"]
        vs = _req(g, "vertices", "projective_generator", list)
        labels = g.get("labels") or [f"P{v}" for v in vs]
        if len(labels) != len(vs) or len(set(labels)) != len(labels):
            raise ParseError("labels must be distinct and match the vertices", "projective_generator.labels")
        gen = {"vertices": [int(v) for v in vs], "labels": [str(x) for x in labels]}
    subs = {}
    for nm, sd in d.get("subalgebras", {}).items():
        w = f"subalgebras.{nm}"
        q = _parse_quiver(sd, w)
        images = {g: _parse_element(v, f"{w}.images.{g}") for g, v in _req(sd, "images", w, dict).items()}
        subs[nm] = (q, images)
    group = None
    if "group" in d:
        gd = d["group"]
        N = _req(gd, "order", "group", int)
        images = {g: _parse_element(v, f"group.images.{g}") for g, v in _req(gd, "images", "group", dict).items()}
        group = {"order": N, "images": images}
    return Description(fld, quiver, order, d.get("name", ""), gen, subs, group)


# ----------------------------------------------------------------------------
# building objects

@dataclass
class Workspace:
    desc: Description
    field: Field
    A: FinDimAlgebra             # the bound quiver algebra
    order: SimpleOrder           # order on A's simples
    algebra: FinDimAlgebra       # working algebra (A, or End(P)^op)
    algebra_order: SimpleOrder
    subalgebras: dict            # name -> SubalgebraEmbedding into the working algebra
    action: GroupAction | None


def _build_path_algebra(q: QuiverSpec, F: Field, where: str) -> FinDimAlgebra:
    try:
        quiver = Quiver(q.vertices, tuple((s, t, n) for n, s, t in q.arrows))
        rels = [[(F(c), quiver.path_from_names(p)) for c, p in rel] for rel in q.relations]
        return build_path_algebra(quiver, rels, F)
    except AlgebraError as e:
        raise ParseError(str(e), where) from None


def element(A: FinDimAlgebra, coeffs: dict, where: str = "") -> list:
    x = A.zero()
    for nm, c in coeffs.items():
        if nm not in A.names:
            raise ParseError(f"unknown basis element {nm!r}", where)
        x[A.names.index(nm)] += A.field(c)
    return x


def element_dict(A: FinDimAlgebra, x) -> dict:
    return {A.names[k]: A.field.to_str(c) for k, c in enumerate(x) if c != 0}


def build(desc: Description, field_override: Field | None = None) -> Workspace:
    F = field_override or Field.parse(desc.field)
    A = _build_path_algebra(desc.quiver, F, "quiver")
    try:
        order = SimpleOrder.from_pairs_1based(desc.quiver.vertices, desc.order)
    except ValueError as e:
        raise ParseError(str(e), "order") from None
    work, work_order = A, order
    if desc.projective_generator:
        vs = [v - 1 for v in desc.projective_generator["vertices"]]
        if any(not 0 <= v < desc.quiver.vertices for v in vs):
            raise ParseError("generator vertex outside the quiver", "projective_generator.vertices")
        work = projective_endomorphism_algebra(A, vs, desc.projective_generator["labels"])
        try:
            work_order = order_on_projective_algebra(work, order)
        except ValueError as e:
            raise ParseError(str(e), "projective_generator") from None
    subs = {}
    for nm, (q, images) in desc.subalgebras.items():
        B = _build_path_algebra(q, F, f"subalgebras.{nm}")
        imgs = {g: element(work, v, f"subalgebras.{nm}.images.{g}") for g, v in images.items()}
        try:
            subs[nm] = embedding_from_generators(B, work, imgs, name=nm)
        except AlgebraError as e:
            raise ParseError(str(e), f"subalgebras.{nm}") from None
    action = None
    if desc.group:
        pairs = [(element(work, {g: "1"}, f"group.images.{g}"), element(work, v, f"group.images.{g}"))
                 for g, v in desc.group["images"].items()]
        try:
            M = automorphism_from_images(work, pairs)
            action = cyclic_action(work, M, desc.group["order"])
        except AlgebraError as e:
            raise ParseError(str(e), "group") from None
    return Workspace(desc, F, A, order, work, work_order, subs, action)


# ----------------------------------------------------------------------------
# descriptions of the built-in examples

def _quiver_spec(A: FinDimAlgebra, relations) -> QuiverSpec:
    q = A.quiver
    rels = [[(A.field.to_str(A.field(c)) if not isinstance(c, str) else c, q.path_name(p).split("*"))
             for c, p in rel] for rel in relations]
    return QuiverSpec(q.n, [(n, s, t) for s, t, n in q.arrows], rels)


def _sub_images(emb: SubalgebraEmbedding) -> dict:
    B = emb.sub
    gens = [f"e{v + 1}" for v in range(B.quiver.n)] + [a[2] for a in B.quiver.arrows]
    return {g: element_dict(emb.amb, emb(B.basis(B.index(g)))) for g in gens}


def _group_images(R: FinDimAlgebra, M) -> dict:
    return {R.names[k]: element_dict(R, la.apply_to_vector(M, R.basis(k))) for k in generating_basis_subset(R)}


def describe_pair(A, relations, order: SimpleOrder, R, subs: dict, action=None, N=None, name="") -> Description:
    desc = Description(A.field.name, _quiver_spec(A, relations), [(a + 1, b + 1) for a, b in order.covers], name)
    desc.projective_generator = {"vertices": [v + 1 for v in R.proj_vertices], "labels": list(R.proj_labels)}
    for nm, emb in subs.items():
        desc.subalgebras[nm] = (_quiver_spec(emb.sub, []), _sub_images(emb))
    if action is not None:
        desc.group = {"order": N, "images": _group_images(R, action)}
    return desc


def auslander_description(n: int, N: int | None = None, field: Field | None = None) -> Description:
    from .examples import auslander_relations
    ex = example_auslander(n, field, N)
    rels = auslander_relations(ex.A.quiver, n)
    return describe_pair(ex.A, rels, ex.order, ex.R, {"B": ex.iota},
                         ex.action_R if N else None, N, f"auslander n={n}")


def two_source_description(field: Field | None = None) -> Description:
    ex = example_two_source(field)
    gB = ex.iota.compose_automorphism(ex.action_R, name="gB")
    return describe_pair(ex.A, [], ex.order, ex.R, {"B": ex.iota, "gB": gB}, ex.action_R, 2, "two-source")
