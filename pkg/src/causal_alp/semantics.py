"""Supported and stable models of logic programs and abductive programs.

Stability is decided with unfounded sets: a world is stable when it satisfies
every clause and its greatest unfounded set is empty.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .core import (
    DEFAULT_ATOM_LIMIT,
    AbductiveProgram,
    Literal,
    LogicProgram,
    check_guard,
)
from .errors import ContractError

STABLE = "stable"
SUPPORTED = "supported"


@dataclass(frozen=True)
class AtomDefinition:
    """``atom <-> OR of bodies``; no bodies means false, an empty body means true."""

    atom: str
    bodies: tuple[tuple[Literal, ...], ...]

    def holds_in(self, world) -> bool:
        supported = any(all(l.holds_in(world) for l in body) for body in self.bodies)
        return (self.atom in world) == supported


@dataclass(frozen=True)
class AbductiveModel:
    explanation: frozenset[str]
    world: frozenset[str]
    semantics: str = STABLE


def clark_completion(p: LogicProgram) -> list[AtomDefinition]:
    bodies: dict[str, list] = {a: [] for a in p.alphabet}
    for c in p.clauses:
        bodies[c.head].append(c.body)
    return [AtomDefinition(a, tuple(bodies[a])) for a in p.alphabet]


# bit-mask kernels; ``w`` is a world mask over the program alphabet

def _immediate(p: LogicProgram, w: int) -> int:
    """Heads of clauses whose body holds in ``w``."""
    out = 0
    for h, pm, nm in p.compiled:
        if w & pm == pm and not w & nm:
            out |= h
    return out


def _is_model(p: LogicProgram, w: int) -> bool:
    return _immediate(p, w) & ~w == 0


def _greatest_unfounded(p: LogicProgram, w: int) -> int:
    unfounded = w
    changed = True
    while changed and unfounded:
        changed = False
        for h, pm, nm in p.compiled:
            if unfounded & h and w & pm == pm and not w & nm and not pm & unfounded:
                unfounded &= ~h
                changed = True
    return unfounded


def _is_stable(p: LogicProgram, w: int) -> bool:
    return _is_model(p, w) and _greatest_unfounded(p, w) == 0


def _least_model_of_reduct(p: LogicProgram, guess: int) -> int:
    """Least model of the positive program left after dropping clauses blocked by ``guess``."""
    active = [(h, pm) for h, pm, nm in p.compiled if not nm & guess]
    m = 0
    changed = True
    while changed:
        changed = False
        for h, pm in active:
            if not m & h and m & pm == pm:
                m |= h
                changed = True
    return m


def _stable_masks(p: LogicProgram) -> list[int]:
    # every stable model is the least model of the reduct it induces, so
    # guessing the negatively used atoms yields a complete candidate list
    negatives = 0
    for _, _, nm in p.compiled:
        negatives |= nm
    bits = [1 << i for i in range(len(p.alphabet)) if negatives >> i & 1]
    found = set()
    for k in range(1 << len(bits)):
        guess = 0
        for j, b in enumerate(bits):
            if k >> j & 1:
                guess |= b
        m = _least_model_of_reduct(p, guess)
        if m & negatives == guess and _is_stable(p, m):
            found.add(m)
    return list(found)


def _worlds(p: LogicProgram, masks: Iterable[int]) -> list[frozenset[str]]:
    return p.alphabet.sort_worlds(p.alphabet.unmask(m) for m in masks)


def satisfies_clauses(p: LogicProgram, world) -> bool:
    return _is_model(p, p.alphabet.mask(world))


def supported_models(p: LogicProgram, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT):
    """Models of the Clark completion, in canonical order."""
    check_guard(p.alphabet, atom_limit)
    return _worlds(p, (w for w in range(1 << len(p.alphabet)) if _immediate(p, w) == w))


def is_unfounded(i: Iterable[str], w, p: LogicProgram) -> bool:
    i, w = frozenset(i), frozenset(w)
    if not i or not i <= w:
        raise ContractError("an unfounded set must be a non-empty subset of the true atoms")
    for c in p.clauses:
        if c.head not in i:
            continue
        if not any(not l.holds_in(w) or (l.positive and l.atom in i) for l in c.body):
            return False
    return True


def greatest_unfounded_set(w, p: LogicProgram) -> frozenset[str]:
    return p.alphabet.unmask(_greatest_unfounded(p, p.alphabet.mask(w)))


def is_stable(w, p: LogicProgram) -> bool:
    return _is_stable(p, p.alphabet.mask(w))


def stable_models(
    p: LogicProgram,
    *,
    atom_limit: int | None = DEFAULT_ATOM_LIMIT,
    exhaustive: bool = False,
) -> list[frozenset[str]]:
    """Stable models in canonical order.

    Candidates come from guessing the negatively used atoms unless
    ``exhaustive`` asks for a sweep over every world; either way each
    candidate is accepted by the unfounded-set test.
    """
    check_guard(p.alphabet, atom_limit)
    if exhaustive:
        masks = [w for w in range(1 << len(p.alphabet)) if _is_stable(p, w)]
    else:
        masks = _stable_masks(p)
    return _worlds(p, masks)


def has_stable_model(p: LogicProgram, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT) -> bool:
    check_guard(p.alphabet, atom_limit)
    return bool(_stable_masks(p))


def _models_for(ap: AbductiveProgram, sem: str, eps: frozenset[str]) -> list[AbductiveModel]:
    prog = ap.program.with_facts(eps)
    worlds = stable_models(prog, atom_limit=None) if sem == STABLE \
        else supported_models(prog, atom_limit=None)
    return [AbductiveModel(eps, w, sem) for w in worlds if ap.satisfies_constraints(w)]


def _check_sem(sem: str) -> None:
    if sem not in (STABLE, SUPPORTED):
        raise ContractError(f"unknown semantics {sem!r}")


def abductive_models(
    ap: AbductiveProgram,
    sem: str = STABLE,
    *,
    explanation: Iterable[str] | None = None,
    atom_limit: int | None = DEFAULT_ATOM_LIMIT,
    jobs: int = 1,
) -> list[AbductiveModel]:
    """Models of ``P ∪ ε`` for each explanation ``ε`` that satisfy every constraint.

    ``explanation`` restricts the enumeration to one subset of the abducibles.
    """
    _check_sem(sem)
    check_guard(ap.alphabet, atom_limit)
    if explanation is not None:
        eps = frozenset(explanation)
        if not eps <= set(ap.abducibles):
            raise ContractError(f"{sorted(eps - set(ap.abducibles))} are not abducibles")
        explanations = [eps]
    else:
        explanations = ap.explanations()
    if jobs > 1 and len(explanations) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_models_for, [ap] * len(explanations),
                                   [sem] * len(explanations), explanations))
    else:
        chunks = [_models_for(ap, sem, eps) for eps in explanations]
    models = [m for chunk in chunks for m in chunk]
    return sorted(models, key=lambda m: ap.alphabet.world_key(m.world))


def inconsistent_explanations(
    ap: AbductiveProgram, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT
) -> list[frozenset[str]]:
    """Explanations for which ``P ∪ ε`` has no stable model; constraints are ignored."""
    check_guard(ap.alphabet, atom_limit)
    return [eps for eps in ap.explanations()
            if not has_stable_model(ap.program.with_facts(eps), atom_limit=None)]


def is_consistent(ap: AbductiveProgram, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT) -> bool:
    return not inconsistent_explanations(ap, atom_limit=atom_limit)
