"""The ``qha`` command line.

Every command reads an algebra description (a path, or ``-`` for stdin) and
prints a report: plain text by default, JSON with ``--json``.  Exit status is
0 when all checks pass, 1 when a check fails and 2 on parse or scope errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import io as qio
from .ainfty import AInftyError, ExtModel, check_stasheff, truncate
from .algebra import AlgebraError
from .borel import SynthesisError, conjugate_subalgebras, reconstruct, synthesize_borel_pair
from .linalg import Field
from .modules import ext_dimensions, simple_modules
from .qh import check_quasi_hereditary, composition_factors, standard_modules, verify_exact_borel
from .skew import (
    ScopeError,
    action_char_polys,
    check_invariant_order,
    classify_compatible_twists,
    invariant_borel_obstruction,
    skew_group_algebra,
)


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# helpers

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise qio.ParseError(str(e), path) from None


def _workspace(args) -> qio.Workspace:
    desc = qio.parse(_read(args.file))
    return qio.build(desc, Field.parse(args.field) if args.field else None)


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _elem(A, x) -> dict:
    return {"coordinates": [A.field.to_str(c) for c in x], "expansion": A.name_of(x)}


def _sub(ws: qio.Workspace, name: str | None):
    if not ws.subalgebras:
        raise UsageError("the description declares no subalgebras")
    if name is None:
        name = next(iter(ws.subalgebras))
    if name not in ws.subalgebras:
        raise UsageError(f"unknown subalgebra {name!r} (have {', '.join(ws.subalgebras)})")
    return ws.subalgebras[name]


def _relations(F, relations):
    return [[{"coefficient": c if isinstance(c, str) else F.to_str(F(c)), "path": list(p)} for c, p in rel]
            for rel in relations]


def _model_dict(model) -> dict:
    F = model.field
    basis = [{"name": model.names[k], "degree": model.deg[k], "src": model.src[k] + 1,
              "tgt": model.tgt[k] + 1} for k in range(model.dim)]
    ops = {}
    for n in sorted(model.ops):
        rows = []
        for tup, vec in sorted(model.ops[n].items()):
            out = {model.names[k]: F.to_str(c) for k, c in sorted(vec.items()) if c != 0}
            if out:
                rows.append({"inputs": [model.names[k] for k in tup], "output": out})
        if rows:
            ops[f"m{n}"] = rows
    return {"degree_dims": {str(k): v for k, v in model.degree_dims().items()}, "basis": basis, "operations": ops}


# ----------------------------------------------------------------------------
# commands; each returns (report, passed)

def cmd_check(args):
    ws = _workspace(args)
    rep = check_quasi_hereditary(ws.algebra, ws.algebra_order, _rng(args))
    return {
        "quasi_hereditary": rep.quasi_hereditary,
        "end_delta_dims": rep.end_dims,
        "delta_dims": rep.delta_dims,
        "delta_filtrations": [None if f is None else [j + 1 for j in f] for f in rep.filtrations],
        "failures": rep.failures,
    }, rep.quasi_hereditary


def cmd_standard_modules(args):
    ws = _workspace(args)
    deltas = standard_modules(ws.algebra, ws.algebra_order)
    return {"standard_modules": [{"index": c + 1, "dim": D.dim, "composition_factors": composition_factors(D)}
                                 for c, D in enumerate(deltas)]}, True


def _modules(ws, kind):
    if kind == "simples":
        return simple_modules(ws.algebra)
    return standard_modules(ws.algebra, ws.algebra_order)


def cmd_ext(args):
    ws = _workspace(args)
    mods = _modules(ws, args.modules)
    table = {}
    for i, M in enumerate(mods):
        for j, N in enumerate(mods):
            table[f"{i + 1},{j + 1}"] = ext_dimensions(M, N, args.up_to)
    return {"modules": args.modules, "degrees": list(range(args.up_to + 1)), "ext_dims": table}, True


def _ext_model(ws, args):
    return ExtModel(standard_modules(ws.algebra, ws.algebra_order), args.arity_cap)


def cmd_minimal_model(args):
    ws = _workspace(args)
    ext = _ext_model(ws, args)
    model = ext.model
    defects = check_stasheff(model, up_to=model.cap)
    ok = not any(defects.values())
    out = _model_dict(model)
    out["arity_cap"] = model.cap
    out["stasheff_defects"] = {str(k): v for k, v in defects.items()}
    out["stasheff_ok"] = ok
    return out, ok


def cmd_reconstruct(args):
    ws = _workspace(args)
    ext = _ext_model(ws, args)
    recon = reconstruct(truncate(ext.model))
    q = recon.quiver
    return {
        "quiver": {"vertices": q.n, "arrows": [{"name": n, "src": s, "tgt": t} for s, t, n in q.arrows]},
        "relations": _relations(ws.field, recon.relations),
        "dim": recon.algebra.dim,
    }, True


def cmd_synthesize(args):
    ws = _workspace(args)
    syn = synthesize_borel_pair(ws.A, ws.order, args.arity_cap, args.regular_cap, _rng(args))
    B, R, iota = syn.B, syn.R, syn.iota
    rep = syn.report
    if args.emit:
        desc = qio.describe_pair(ws.A, ws.desc.quiver.relations, ws.order, R, {"B": iota}, name="synthesized pair")
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(qio.emit(desc))
    gens = [f"e{v + 1}" for v in range(B.quiver.n)] + [a[2] for a in B.quiver.arrows]
    out = {
        "dims": {"A": ws.A.dim, "R": R.dim, "B": B.dim},
        "multiplicities": {str(i): {str(v): m for v, m in d.items()} for i, d in syn.multiplicities().items()},
        "R_projectives": [v + 1 for v in R.proj_vertices],
        "B_quiver": {"vertices": B.quiver.n,
                     "arrows": [{"name": n, "src": s, "tgt": t} for s, t, n in B.quiver.arrows]},
        "B_relations": _relations(ws.field, syn.recon.relations),
        "iota": {g: qio.element_dict(R, iota(B.basis(B.index(g)))) for g in gens},
        "report": rep.as_dict(),
        "notes": syn.notes,
    }
    ok = rep.is_exact_borel and rep.normal == "true" and rep.regular is True
    return out, ok


def cmd_verify_borel(args):
    ws = _workspace(args)
    emb = _sub(ws, args.sub)
    rep = verify_exact_borel(ws.algebra, ws.algebra_order, emb, args.regular_cap, _rng(args))
    return {"subalgebra": emb.name, "report": rep.as_dict(), "exact_borel": rep.is_exact_borel}, rep.is_exact_borel


def cmd_conjugate(args):
    ws = _workspace(args)
    emb, emb2 = _sub(ws, args.sub), _sub(ws, args.sub2)
    res = conjugate_subalgebras(emb, emb2, _rng(args))
    out = {"status": res.status, "tried": res.tried, "notes": res.notes,
           "matching": None if res.matching is None else [m + 1 for m in res.matching],
           "unit": None if res.unit is None else _elem(ws.algebra, res.unit)}
    return out, res.status == "found"


def cmd_skew(args):
    ws = _workspace(args)
    if ws.action is None:
        raise UsageError("the description declares no group action")
    act = ws.action
    A = ws.algebra
    emb = _sub(ws, args.sub)
    S = skew_group_algebra(A, act)
    cl = classify_compatible_twists(A, act, emb, rng=_rng(args))
    verdict = invariant_borel_obstruction(A, act, emb, rng=_rng(args))
    out = {
        "group_order": act.order,
        "skew_algebra": {"dim": S.dim, "associative": S.check_associative(), "unital": S.check_unit()},
        "invariant_order": check_invariant_order(A, ws.algebra_order, act),
        "char_polys": action_char_polys(act),
        "twists": {"complete": cl.complete, "method": cl.method,
                   "families": [{"label": f.label, "rho": f.describe(A), "parameters": [str(p) for p in f.params]}
                                for f in cl.families]},
        "verdict": verdict.verdict,
        "char_poly_table": verdict.table,
        "notes": verdict.notes,
    }
    if verdict.conjugator is not None:
        out["conjugator"] = _elem(A, verdict.conjugator)
    return out, verdict.verdict != "undetermined"


def cmd_example(args):
    F = Field.parse(args.field) if args.field else None
    if args.which == "auslander":
        if args.n is None or args.n < 1:
            raise UsageError("auslander needs --n N with N >= 1")
        desc = qio.auslander_description(args.n, args.group, F)
    else:
        desc = qio.two_source_description(F)
    text = qio.emit(desc)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
        return None, True
    sys.stdout.write(text)
    return None, True


COMMANDS = {
    "check": cmd_check,
    "standard-modules": cmd_standard_modules,
    "ext": cmd_ext,
    "minimal-model": cmd_minimal_model,
    "reconstruct": cmd_reconstruct,
    "synthesize": cmd_synthesize,
    "verify-borel": cmd_verify_borel,
    "conjugate": cmd_conjugate,
    "skew": cmd_skew,
    "example": cmd_example,
}


# ----------------------------------------------------------------------------
# output

def _render(obj, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _emit_report(command: str, report: dict, as_json: bool):
    full = {"composition": qio.COMPOSITION, "command": command}
    full.update(report)
    if as_json:
        sys.stdout.write(json.dumps(full, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(_render(full)) + "\n")


# ----------------------------------------------------------------------------
# argument parsing

def _global_flags(p, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--seed", type=int, default=d if suppress else 0, help="seed for randomized searches")
    p.add_argument("--arity-cap", type=int, default=d, help="highest A-infinity arity computed")
    p.add_argument("--field", default=d, help="override the field: rational | fp:<p>")
    p.add_argument("--json", action="store_true", default=d if suppress else False, help="JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qha", description="Quasi-hereditary algebras and exact Borel subalgebras.")
    _global_flags(parser, False)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "quasi-heredity report",
        "standard-modules": "dimensions and composition factors of the standard modules",
        "ext": "Ext dimension table",
        "minimal-model": "minimal A-infinity model of Ext(Delta, Delta) with a Stasheff check",
        "reconstruct": "bound quiver reconstructed from the minimal model",
        "synthesize": "regular exact Borel pair (R, B, iota) with its report",
        "verify-borel": "exact Borel report for a declared subalgebra",
        "conjugate": "unit conjugating one declared subalgebra onto another",
        "skew": "skew group algebra, invariant order, twist classification and obstruction verdict",
        "example": "emit a built-in example description",
    }
    ps = {}
    for name, h in helps.items():
        p = sub.add_parser(name, help=h)
        _global_flags(p, True)
        ps[name] = p
        if name != "example":
            p.add_argument("file", help="description file, or - for stdin")
    ps["ext"].add_argument("--modules", choices=["delta", "simples"], default="delta")
    ps["ext"].add_argument("--up-to", type=int, default=4)
    for name in ("synthesize", "verify-borel"):
        ps[name].add_argument("--regular-cap", type=int, default=4, help="highest degree of the regularity check")
    ps["synthesize"].add_argument("--emit", help="also write the synthesized pair as a description")
    ps["verify-borel"].add_argument("--sub")
    ps["conjugate"].add_argument("--sub", required=True)
    ps["conjugate"].add_argument("--sub2", required=True)
    ps["skew"].add_argument("--sub")
    ps["example"].add_argument("which", choices=["auslander", "two-source"])
    ps["example"].add_argument("--n", type=int)
    ps["example"].add_argument("--group", type=int, help="order N of the cyclic group action (auslander)")
    ps["example"].add_argument("--emit", help="write to this path instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, ok = COMMANDS[args.command](args)
    except qio.ParseError as e:
        print(f"qha: parse error: {e}", file=sys.stderr)
        return 2
    except (ScopeError, UsageError, ValueError) as e:
        print(f"qha: {e}", file=sys.stderr)
        return 2
    except (AlgebraError, AInftyError, SynthesisError) as e:
        print(f"qha: {args.command} failed: {e}", file=sys.stderr)
        return 1
    if report is not None:
        _emit_report(args.command, report, args.json)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
