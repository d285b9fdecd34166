"""Command-line surface: gen / faces / search / verify / enumerate / analyze.

All commands read polytope documents from a file argument or stdin ("-")
and write to stdout, so they compose in pipes.  Exit codes: 0 for
success, found, or valid; 1 for not-conic or an invalid certificate;
2 for input or schema errors; 3 when a search budget ran out.
"""

import argparse
import json
import sys

from . import builders
from .engine import (SearchConstraint, Verdict, enumerate_all_sequences,
                     search_conic, verify_certificate)
from .errors import ConicseqError
from .io import (AnalysisReport, BuiltPolytope, PolytopeDocument, analyze,
                 build_polytope, dumps_document, emit_certificate,
                 emit_polytope, emit_report, parse_certificate, parse_polytope)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


def _read(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _constraint(value):
    return SearchConstraint(value)


def _load_built(path):
    return build_polytope(parse_polytope(_read(path)))


def _cmd_gen(args):
    family = args.family
    if family in ("simplex", "cube", "cross"):
        if args.dim is None:
            raise ConicseqError(f"gen {family} requires --dim")
        vrep = {"simplex": builders.simplex, "cube": builders.cube,
                "cross": builders.cross_polytope}[family](args.dim)
    elif family in ("polygon", "prism", "pyramid", "bipyramid"):
        if args.gon is None:
            raise ConicseqError(f"gen {family} requires --gon")
        base = builders.polygon(args.gon)
        if family == "polygon":
            vrep = base
        elif family == "prism":
            vrep = builders.prism(base)
        elif family == "pyramid":
            vrep = builders.pyramid(base)
        else:
            vrep = builders.bipyramid(base)
        if args.dim is not None and family != "polygon" and args.dim != 3:
            raise ConicseqError(f"gen {family} over a polygon is "
                                f"3-dimensional, got --dim {args.dim}")
    elif family == "bruhat":
        if not (args.u and args.w and args.n):
            raise ConicseqError("gen bruhat requires --u, --w and --n")
        vrep = builders.bruhat_interval_polytope(
            builders.Permutation.parse(args.u),
            builders.Permutation.parse(args.w), args.n)
    elif family == "gz3":
        doc = PolytopeDocument(name="GZ3", hrep=builders.gelfand_zetlin_3())
        _write(args.output, dumps_document(emit_polytope(doc)))
        return EXIT_OK
    else:
        raise ConicseqError(f"unknown family {family!r}")
    doc = PolytopeDocument(name=vrep.name, vrep=vrep)
    _write(args.output, dumps_document(emit_polytope(doc)))
    return EXIT_OK


def _cmd_faces(args):
    built = _load_built(args.file)
    if args.json:
        faces = [{"dim": f.dim,
                  "vertices": sorted(built.to_document_vertex(v)
                                     for v in f.vertex_set)}
                 for f in built.poset.faces]
        _write(None, dumps_document({
            "name": built.doc.name,
            "f_vector": list(built.poset.f_vector()),
            "faces": faces,
        }))
    else:
        f = built.poset.f_vector()
        _write(None, "(" + ", ".join(map(str, f)) + ")\n")
    return EXIT_OK


def _cmd_search(args):
    built = _load_built(args.file)
    constraint = _constraint(args.require)
    result = search_conic(built.poset, constraint, budget=args.budget)
    sys.stdout.write(f"{result.verdict.value}\n")
    if result.verdict is Verdict.FOUND and args.emit_certificate:
        doc = emit_certificate(built, result.certificate, constraint)
        _write(args.emit_certificate, dumps_document(doc))
    if result.verdict is Verdict.FOUND:
        return EXIT_OK
    if result.verdict is Verdict.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_NEGATIVE


def _cmd_verify(args):
    built = _load_built(args.file)
    cert, recorded = parse_certificate(_read(args.certfile), built)
    constraint = _constraint(args.require) if args.require else recorded
    outcome = verify_certificate(built.poset, cert, constraint)
    sys.stdout.write(("valid" if outcome.ok else "invalid") + "\n")
    if not outcome.ok:
        sys.stderr.write(outcome.message + "\n")
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_enumerate(args):
    built = _load_built(args.file)
    constraint = _constraint(args.require)
    certs = enumerate_all_sequences(built.poset, constraint, limit=args.limit)
    docs = [emit_certificate(built, c, constraint) for c in certs]
    _write(None, dumps_document({"count": len(docs), "certificates": docs}))
    return EXIT_OK if docs else EXIT_NEGATIVE


def _cmd_analyze(args):
    built = _load_built(args.file)
    report = analyze(built, budget=args.budget)
    _write(None, emit_report(report, args.format))
    return EXIT_OK


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="conicseq",
        description="conic sequences of convex polytopes: search, "
                    "certificates, and combinatorial invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a polytope document")
    gen.add_argument("family",
                     choices=["simplex", "cube", "cross", "polygon", "prism",
                              "pyramid", "bipyramid", "bruhat", "gz3"])
    gen.add_argument("--dim", type=int)
    gen.add_argument("--gon", type=int)
    gen.add_argument("--u")
    gen.add_argument("--w")
    gen.add_argument("--n", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_gen)

    faces = sub.add_parser("faces", help="face lattice and f-vector")
    faces.add_argument("file", nargs="?")
    group = faces.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    group.add_argument("--fvector", action="store_true")
    faces.set_defaults(func=_cmd_faces)

    search = sub.add_parser("search", help="search for a conic sequence")
    search.add_argument("file", nargs="?")
    search.add_argument("--require", required=True,
                        choices=["any", "simplex", "cube", "simple"])
    search.add_argument("--budget", type=int)
    search.add_argument("--emit-certificate", metavar="FILE")
    search.set_defaults(func=_cmd_search)

    verify = sub.add_parser("verify", help="replay a certificate")
    verify.add_argument("file")
    verify.add_argument("certfile")
    verify.add_argument("--require",
                        choices=["any", "simplex", "cube", "simple"])
    verify.set_defaults(func=_cmd_verify)

    enum = sub.add_parser("enumerate", help="exhaustively list sequences")
    enum.add_argument("file", nargs="?")
    enum.add_argument("--require", required=True,
                      choices=["any", "simplex", "cube", "simple"])
    enum.add_argument("--limit", type=int, required=True)
    enum.set_defaults(func=_cmd_enumerate)

    an = sub.add_parser("analyze", help="full invariant report")
    an.add_argument("file", nargs="?")
    an.add_argument("--format", choices=["json", "text"], default="json")
    an.add_argument("--budget", type=int)
    an.set_defaults(func=_cmd_analyze)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConicseqError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
