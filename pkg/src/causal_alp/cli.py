"""Command line interface.

Exit codes: 0 success (a model exists / the check passes), 1 no model or a
failed check, 2 usage, parse or resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formats
from .causal import bochman_transform, causally_founded_worlds
from .core import DEFAULT_ATOM_LIMIT, AbductiveProgram
from .errors import CausalALPError, ParseError
from .graph import dependence_graph
from .intervention import Assignment, cm_semantics, intervene, scm_solutions
from .parser import SourceProgram, parse_program, render_program
from .principles import (
    DEFAULT_IRRELEVANCE_LIMIT,
    check_irrelevance,
    check_non_interference,
    check_stratified_irrelevance,
)
from .semantics import STABLE, SUPPORTED, AbductiveModel, abductive_models, inconsistent_explanations

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    input_path: str
    output_format: str = "text"
    atom_limit: int = DEFAULT_ATOM_LIMIT
    irrelevance_limit: int = DEFAULT_IRRELEVANCE_LIMIT
    jobs: int = 1


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _atom_list(text: str) -> list[str]:
    return [a.strip() for a in text.split(",") if a.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="program in .alp format, or - for stdin")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--atom-limit", type=_positive, default=DEFAULT_ATOM_LIMIT)
    common.add_argument("--irrelevance-limit", type=_positive, default=DEFAULT_IRRELEVANCE_LIMIT)
    common.add_argument("--jobs", type=_positive, default=1)

    enum = argparse.ArgumentParser(add_help=False)
    enum.add_argument("--semantics", choices=(STABLE, SUPPORTED), default=STABLE)
    enum.add_argument("--explanation", type=_atom_list, default=None,
                      help="comma separated abducibles; only this explanation is enumerated")

    do = argparse.ArgumentParser(add_help=False)
    do.add_argument("--do", action="append", default=[], metavar="ATOM=BOOL",
                    help="force an atom; repeatable")

    parser = argparse.ArgumentParser(
        prog="causal-alp",
        description="Causal reasoning with stratified abductive logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("models", parents=[common, enum], help="list abductive models")
    p = sub.add_parser("intervene", parents=[common, enum, do],
                       help="list models after an intervention")
    p.add_argument("--emit-program", action="store_true",
                   help="print the modified program instead of its models")
    p = sub.add_parser("check", parents=[common, do], help="decide a causal principle")
    p.add_argument("--principle", required=True,
                   choices=("stratified", "irrelevance", "consistency", "non-interference"))
    p.add_argument("--set", type=_atom_list, default=None, dest="intervened",
                   help="intervened atoms for non-interference (defaults to the --do atoms)")
    p = sub.add_parser("bochman", parents=[common], help="print the causal system")
    p.add_argument("--worlds", action="store_true", help="append causally founded worlds")
    p = sub.add_parser("cm", parents=[common], help="print the structural causal model")
    p.add_argument("--worlds", action="store_true", help="append its solutions")
    sub.add_parser("graph", parents=[common], help="print the dependence graph")
    return parser


class _Output:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out

    def emit(self, text: str | None = None, data=None):
        if self.fmt == "json":
            json.dump(data, self.out, indent=2)
            self.out.write("\n")
        elif text:
            self.out.write(text if text.endswith("\n") else text + "\n")


def _read(cfg: CliConfig, stdin, err) -> AbductiveProgram:
    if cfg.input_path == "-":
        src = SourceProgram(stdin.read(), "<stdin>")
    else:
        with open(cfg.input_path, encoding="utf-8") as fh:
            src = SourceProgram(fh.read(), cfg.input_path)
    diags = []
    try:
        ap = parse_program(src, atom_limit=cfg.atom_limit, diagnostics=diags)
    except ParseError as exc:
        for d in exc.diagnostics:
            err.write(f"{src.origin}:{d}\n")
        raise
    for d in diags:
        err.write(f"{src.origin}:{d}\n")
    return ap


def _list_models(ap, models, sem, out: _Output, err) -> int:
    out.emit("\n".join(formats.model_lines(ap.alphabet, models)),
             formats.models_json(ap, models, sem))
    if not models and out.fmt == "text":
        err.write("no models\n")
    return EXIT_OK if models else EXIT_FAIL


def _models(args, cfg, ap, out, err) -> int:
    models = abductive_models(ap, args.semantics, explanation=args.explanation,
                              atom_limit=cfg.atom_limit, jobs=cfg.jobs)
    return _list_models(ap, models, args.semantics, out, err)


def _intervene(args, cfg, ap, out, err) -> int:
    modified = intervene(ap, Assignment.parse(args.do))
    if args.emit_program:
        out.emit(render_program(modified), {"program": render_program(modified)})
        return EXIT_OK
    return _models(args, cfg, modified, out, err)


def _check(args, cfg, ap, out, err) -> int:
    principle = args.principle
    if principle == "stratified":
        ok = check_stratified_irrelevance(ap, atom_limit=cfg.atom_limit)
        out.emit(f"{'PASS' if ok else 'FAIL'} stratified",
                 {"principle": "stratified", "holds": ok})
        return EXIT_OK if ok else EXIT_FAIL
    if principle == "consistency":
        bad = inconsistent_explanations(ap, atom_limit=cfg.atom_limit)
        text = "PASS consistency" if not bad else (
            "FAIL consistency: no stable model for explanation "
            + formats.fmt_set(ap.alphabet, bad[0]))
        out.emit(text, {"principle": "consistency", "holds": not bad,
                        "inconsistent_explanations":
                            [formats.atoms_json(ap.alphabet, e) for e in bad]})
        return EXIT_OK if not bad else EXIT_FAIL
    if principle == "irrelevance":
        v = check_irrelevance(ap, atom_limit=cfg.irrelevance_limit)
        out.emit(formats.verdict_text(ap.alphabet, v), formats.verdict_json(ap.alphabet, v))
        return EXIT_OK if v.holds else EXIT_FAIL
    assignment = Assignment.parse(args.do)
    s = args.intervened if args.intervened is not None else sorted(assignment.atoms())
    r = check_non_interference(ap, s, assignment, atom_limit=cfg.irrelevance_limit)
    out.emit(formats.non_interference_text(ap.alphabet, r),
             formats.non_interference_json(ap.alphabet, r))
    return EXIT_OK if r.equivalent else EXIT_FAIL


def _bochman(args, cfg, ap, out, err) -> int:
    cs = bochman_transform(ap)
    text = formats.causal_system_text(cs)
    data = formats.causal_system_json(cs)
    if args.worlds:
        abd = set(ap.abducibles)
        worlds = causally_founded_worlds(cs, atom_limit=cfg.atom_limit)
        models = [AbductiveModel(w & abd, w, STABLE) for w in worlds]
        text += "worlds:\n" + "".join(l + "\n" for l in formats.model_lines(ap.alphabet, models))
        data["worlds"] = formats.models_json(ap, models, STABLE)["models"]
    out.emit(text, data)
    return EXIT_OK


def _cm(args, cfg, ap, out, err) -> int:
    m = cm_semantics(ap)
    text = formats.scm_text(m)
    data = formats.scm_json(m)
    if args.worlds:
        abd = set(ap.abducibles)
        sols = [AbductiveModel(w & abd, w, SUPPORTED)
                for w in scm_solutions(m, atom_limit=cfg.atom_limit)]
        text += "solutions:\n" + "".join(l + "\n" for l in formats.model_lines(ap.alphabet, sols))
        data["solutions"] = formats.models_json(ap, sols, SUPPORTED)["models"]
    out.emit(text, data)
    return EXIT_OK


def _graph(args, cfg, ap, out, err) -> int:
    g = dependence_graph(ap.program)
    out.emit(g.to_dot(), formats.graph_json(g))
    return EXIT_OK


COMMANDS = {
    "models": _models,
    "intervene": _intervene,
    "check": _check,
    "bochman": _bochman,
    "cm": _cm,
    "graph": _graph,
}


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    cfg = CliConfig(args.file, args.format, args.atom_limit, args.irrelevance_limit, args.jobs)
    try:
        ap = _read(cfg, stdin, stderr)
        return COMMANDS[args.command](args, cfg, ap, _Output(cfg.output_format, stdout), stderr)
    except ParseError:
        return EXIT_ERROR
    except (CausalALPError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
