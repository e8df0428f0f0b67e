"""Command-line entry point: ``pbwalg <command> [algebra] [options]``.

Exit status: 0 on success, 1 when ``check`` finds the algebra not PBW,
2 on usage, parse or catalog errors, 3 when a reduction does not stabilize.
"""

from __future__ import annotations

import argparse
import sys

import yaml

from . import catalog
from .casimir import casimir_system, solve_nullspace, verify_casimir
from .diamond import is_pbw, pbw_constraints
from .freealg import word_str
from .parsing import ParseError, format_algebra, parse_algebra_file, parse_expression, parse_scalar
from .relations import ReductionError, normal_form
from .transform import apply, classify_AB_form, parse_transformation

FORMAT_VERSION = 1

EXIT_OK, EXIT_NOT_PBW, EXIT_USAGE, EXIT_DIVERGED = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- argument handling ----------------------------------------------------------

def _parse_assignment(text: str | None, params) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"--at expects name=value pairs, got {item!r}")
        if name not in params:
            raise UsageError(f"unknown parameter {name!r}")
        out[name] = parse_scalar(value, params)
    return out


def _load(args):
    if args.catalog and args.algebra:
        raise UsageError("give either an algebra file or --catalog, not both")
    if args.catalog:
        R = catalog.get(args.catalog).relations(printed=args.printed)
    elif args.algebra:
        try:
            with open(args.algebra, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.algebra}: {exc.strerror}") from None
        R = parse_algebra_file(text)
    else:
        raise UsageError("no algebra given (file path or --catalog ID)")
    assignment = _parse_assignment(args.at, R.params)
    if assignment:
        for p in R.assumptions:
            if p.substitute(assignment).is_zero():
                raise UsageError(f"assignment requires {p} != 0")
        R = R.substitute(assignment)
    return R


# -- commands -------------------------------------------------------------------
# Each returns (exit status, text lines, structured mapping).

def _cmd_check(args):
    R = _load(args)
    v = is_pbw(R)
    assumed = [str(a) for a in v.assumptions]
    doc = {"status": v.status, "assumptions": assumed}
    if v.status == "pbw":
        line = "PBW"
        if assumed:
            line += " (assuming " + ", ".join(f"{a} != 0" for a in assumed) + ")"
        return EXIT_OK, [line], doc
    amb, w, p = v.witness
    doc.update(
        witness_ambiguity=word_str(amb, R.generators),
        witness_word=word_str(w, R.generators),
        witness_polynomial=str(p),
    )
    head = "not PBW" if v.status == "not_pbw" else "undetermined"
    lines = [f"{head}: {word_str(amb, R.generators)} leaves {word_str(w, R.generators)} : {p}"]
    if assumed:
        lines.append("assuming " + ", ".join(f"{a} != 0" for a in assumed))
    if v.status == "undetermined":
        doc["remaining"] = len(v.remaining)
    return (EXIT_NOT_PBW if v.status == "not_pbw" else EXIT_OK), lines, doc


def _cmd_constraints(args):
    R = _load(args)
    cs = pbw_constraints(R)
    rows = [
        {"ambiguity": word_str(a, R.generators), "word": word_str(w, R.generators), "polynomial": str(p)}
        for a, w, p in cs.items()
    ]
    return EXIT_OK, cs.lines(), {"count": cs.count(), "constraints": rows}


def _cmd_reduce(args):
    R = _load(args)
    f = parse_expression(args.expr, R.generators, R.params)
    nf = normal_form(f, R, strategy=args.strategy)
    s = nf.to_str(R.degree_map)
    return EXIT_OK, [s], {"normal_form": s}


def _cmd_casimir(args):
    R = _load(args)
    if args.verify:
        K = parse_expression(args.verify, R.generators, R.params)
        chk = verify_casimir(K, R)
        if chk.ok:
            return EXIT_OK, ["Casimir"], {"casimir": True}
        res = chk.residual.to_str(R.degree_map)
        return EXIT_OK, [f"not central: [K,{chk.generator}] = {res}"], {
            "casimir": False, "generator": chk.generator, "residual": res,
        }
    if args.degree < 1:
        raise UsageError("--degree must be positive")
    basis = solve_nullspace(casimir_system(R, args.degree, graded=args.graded))
    elems = [K.to_str(R.degree_map) for K in basis.elements]
    assumed = [str(a) for a in basis.assumptions]
    lines = [f"dimension {basis.dimension}"] + [f"K{i + 1} = {s}" for i, s in enumerate(elems)]
    if assumed:
        lines.append("assuming " + ", ".join(f"{a} != 0" for a in assumed))
    return EXIT_OK, lines, {
        "degree": args.degree, "dimension": basis.dimension, "casimirs": elems, "assumptions": assumed,
    }


def _cmd_classify(args):
    R = _load(args)
    c = classify_AB_form(R)
    lines = [f"form {c.label}", f"lambda = {c.lam}", "transformation:"]
    lines += ["  " + s for s in c.transformation.lines()]
    assumed = [str(a) for a in c.assumptions]
    if assumed:
        lines.append("assuming " + ", ".join(f"{a} != 0" for a in assumed))
    return EXIT_OK, lines, {
        "label": c.label, "lambda": str(c.lam),
        "transformation": c.transformation.lines(), "assumptions": assumed,
    }


def _cmd_transform(args):
    R = _load(args)
    try:
        with open(args.map, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.map}: {exc.strerror}") from None
    T = parse_transformation(text, R.generators, R.params)
    out = format_algebra(apply(T, R))
    return EXIT_OK, out.rstrip("\n").split("\n"), {"relations": out}


def _cmd_catalog(args):
    if args.action == "list":
        entries = catalog.list_entries()
        width = max(len(i) for i, _ in entries)
        lines = [f"{i.ljust(width)}  {s}" for i, s in entries]
        return EXIT_OK, lines, {"entries": [{"id": i, "summary": s} for i, s in entries]}
    if not args.identifier:
        raise UsageError("catalog show needs an identifier")
    e = catalog.get(args.identifier)
    R = e.relations(printed=args.printed)
    text = format_algebra(R)
    doc = {
        "id": e.identifier,
        "summary": e.summary,
        "relations": text,
        "exclusions": [str(p) for p in R.assumptions],
        "label": e.label,
        "pbw": e.pbw,
        "casimir_degree": e.casimir_degree,
        "degree_map": list(e.degree_map) if e.degree_map else None,
        "corrections": list(e.corrections),
    }
    if e.casimir:
        doc["casimir"] = " ".join(e.casimir.split())
    lines = [f"# {e.identifier}: {e.summary}"] + text.rstrip("\n").split("\n")
    lines.append(f"# label: {e.label or '-'}   pbw: {'yes' if e.pbw else 'constrained'}"
                 f"   casimir degree: {e.casimir_degree or '-'}")
    if e.degree_map:
        lines.append("# degree map: " + " ".join(str(d) for d in e.degree_map))
    for note in e.corrections:
        lines.append(f"# correction: {note}")
    if e.casimir:
        lines.append("# casimir: " + doc["casimir"])
    return EXIT_OK, lines, doc


# -- parser ---------------------------------------------------------------------

def _algebra_args(p):
    p.add_argument("algebra", nargs="?", help="algebra definition file")
    p.add_argument("--catalog", metavar="ID", help="use a built-in catalog entry")
    p.add_argument("--printed", action="store_true", help="with --catalog: the literal printed variant")
    p.add_argument("--at", metavar="NAME=VALUE,...", help="fix parameters to rational values")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pbwalg", description="PBW checks, normal forms and Casimirs")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether the ordered monomials form a basis")
    _algebra_args(p)
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("constraints", help="print the constraint polynomials")
    _algebra_args(p)
    p.set_defaults(run=_cmd_constraints)

    p = sub.add_parser("reduce", help="normal form of an expression")
    _algebra_args(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--strategy", default="leftmost", help="leftmost, rightmost or random:SEED")
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser("casimir", help="Casimir basis up to a degree, or verify one")
    _algebra_args(p)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--graded", action="store_true", help="bound the weighted degree instead")
    p.add_argument("--verify", metavar="EXPR", help="check that EXPR is central instead of solving")
    p.set_defaults(run=_cmd_casimir)

    p = sub.add_parser("classify", help="canonical form of [B,A]")
    _algebra_args(p)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("transform", help="apply a lower-triangular change of generators")
    _algebra_args(p)
    p.add_argument("--map", required=True, metavar="FILE", help="lines like  B = B + 2*A")
    p.set_defaults(run=_cmd_transform)

    p = sub.add_parser("catalog", help="built-in algebras")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("identifier", nargs="?")
    p.add_argument("--printed", action="store_true")
    p.set_defaults(run=_cmd_catalog)
    return ap


def _emit(fmt, command, lines, doc, out):
    if fmt == "structured":
        payload = {"format_version": FORMAT_VERSION, "command": command}
        payload.update(doc)
        out.write(yaml.safe_dump(payload, sort_keys=False, allow_unicode=True, width=1 << 16))
    else:
        for line in lines:
            out.write(line + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, lines, doc = args.run(args)
    except (UsageError, ParseError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"pbwalg: error: {msg}\n")
        return EXIT_USAGE
    except ReductionError as exc:
        err.write(f"pbwalg: error: {exc}\n")
        return EXIT_DIVERGED
    _emit(args.format, args.command, lines, doc, out)
    return status


if __name__ == "__main__":
    sys.exit(main())
