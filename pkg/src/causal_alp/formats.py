"""Text and JSON renderings used by the command line."""

from __future__ import annotations

from typing import Iterable

from .causal import CausalSystem
from .core import AbductiveProgram, Alphabet, Literal
from .graph import DependenceGraph, is_acyclic, is_stratified
from .intervention import StructuralCausalModel
from .principles import IrrelevanceVerdict, NonInterferenceReport
from .semantics import AbductiveModel


def fmt_set(alphabet: Alphabet, atoms: Iterable[str]) -> str:
    return "{" + ",".join(alphabet.sort(atoms)) + "}"


def atoms_json(alphabet: Alphabet, atoms: Iterable[str]) -> list[str]:
    return alphabet.sort(atoms)


def model_lines(alphabet: Alphabet, models: Iterable[AbductiveModel]) -> list[str]:
    return [f"explanation {fmt_set(alphabet, m.explanation)} world {fmt_set(alphabet, m.world)}"
            for m in models]


def models_json(ap: AbductiveProgram, models: Iterable[AbductiveModel], sem: str) -> dict:
    a = ap.alphabet
    return {
        "semantics": sem,
        "alphabet": list(a.atoms),
        "abducibles": list(ap.abducibles),
        "models": [
            {"explanation": atoms_json(a, m.explanation), "world": atoms_json(a, m.world)}
            for m in models
        ],
    }


def models_from_json(data: dict) -> list[AbductiveModel]:
    sem = data["semantics"]
    return [AbductiveModel(frozenset(m["explanation"]), frozenset(m["world"]), sem)
            for m in data["models"]]


def _lits(lits: Iterable[Literal]) -> list[str]:
    return [str(l) for l in lits]


def causal_system_text(cs: CausalSystem) -> str:
    lines = ["external: " + ", ".join(_lits(cs.external))]
    lines += [str(r) for r in cs.knowledge]
    if cs.observations:
        lines.append("observations:")
        lines += [str(o) for o in cs.observations]
    return "\n".join(lines) + "\n"


def causal_system_json(cs: CausalSystem) -> dict:
    return {
        "alphabet": list(cs.alphabet.atoms),
        "knowledge": [{"cause": _lits(r.cause), "effect": str(r.effect)} for r in cs.knowledge],
        "external": _lits(cs.external),
        "observations": [_lits(o.body) for o in cs.observations],
    }


def dnf_text(bodies) -> str:
    if not bodies:
        return "false"
    terms = []
    for body in bodies:
        if not body:
            return "true"
        term = " and ".join(map(str, body))
        terms.append(f"({term})" if len(body) > 1 and len(bodies) > 1 else term)
    return " or ".join(terms)


def scm_text(m: StructuralCausalModel) -> str:
    lines = ["external: " + ", ".join(m.external)]
    lines += [f"{x} := {dnf_text(m.equations[x])}" for x in m.internal]
    return "\n".join(lines) + "\n"


def scm_json(m: StructuralCausalModel) -> dict:
    return {
        "alphabet": list(m.alphabet.atoms),
        "external": list(m.external),
        "internal": list(m.internal),
        "equations": {x: [_lits(b) for b in m.equations[x]] for x in m.internal},
    }


def graph_json(g: DependenceGraph) -> dict:
    return {
        "nodes": list(g.nodes.atoms),
        "edges": [{"from": u, "to": v, "sign": s} for u, v, s in g.edges],
        "stratified": is_stratified(g),
        "acyclic": is_acyclic(g),
    }


def verdict_json(alphabet: Alphabet, v: IrrelevanceVerdict) -> dict:
    out = {
        "principle": "irrelevance",
        "holds": v.holds,
        "consistent": v.consistent,
        "counterexample": None,
    }
    if v.inconsistent_explanation is not None:
        out["inconsistent_explanation"] = atoms_json(alphabet, v.inconsistent_explanation)
    c = v.counterexample
    if c is not None:
        out["counterexample"] = {
            "kind": c.kind,
            "S": atoms_json(alphabet, c.s),
            "world": atoms_json(alphabet, c.world),
            "domain": list(c.domain),
            "program": [str(cl) for cl in c.program.clauses],
        }
    return out


def verdict_text(alphabet: Alphabet, v: IrrelevanceVerdict) -> str:
    if v.holds:
        return "PASS irrelevance\n"
    c = v.counterexample
    lines = ["FAIL irrelevance"]
    if v.inconsistent_explanation is not None:
        lines.append("inconsistent: no stable model for explanation "
                     + fmt_set(alphabet, v.inconsistent_explanation))
    lines.append(f"witness ({c.kind}): S={fmt_set(alphabet, c.s)} "
                 f"world={fmt_set(alphabet, c.world)} over {fmt_set(alphabet, c.domain)}")
    lines.append("program without stable model:")
    lines += ["  " + str(cl) for cl in c.program.clauses]
    return "\n".join(lines) + "\n"


def non_interference_json(alphabet: Alphabet, r: NonInterferenceReport) -> dict:
    a = r.sub_alphabet

    def worlds(ws):
        return [atoms_json(a, w) for w in a.sort_worlds(ws)]

    return {
        "principle": "non-interference",
        "S": atoms_json(alphabet, r.s),
        "assignment": r.assignment.as_dict(),
        "sub_alphabet": list(a.atoms),
        "reducts_of_program": worlds(r.reducts_of_p),
        "stable_models_below": worlds(r.stable_of_below),
        "reducts_after_intervention": worlds(r.reducts_of_pi),
        "equivalent": r.equivalent,
    }


def non_interference_text(alphabet: Alphabet, r: NonInterferenceReport) -> str:
    a = r.sub_alphabet

    def worlds(ws):
        return " ".join(fmt_set(a, w) for w in a.sort_worlds(ws)) or "(none)"

    head = "PASS" if r.equivalent else "FAIL"
    return "\n".join([
        f"{head} non-interference S={fmt_set(alphabet, r.s)} do({r.assignment})",
        f"below: {fmt_set(a, a.atoms)}",
        f"reducts of program: {worlds(r.reducts_of_p)}",
        f"stable models below: {worlds(r.stable_of_below)}",
        f"reducts after intervention: {worlds(r.reducts_of_pi)}",
    ]) + "\n"
