"""Causal theories, explainability, causal systems and the Bochman transformation.

Literals over an alphabet of ``n`` atoms are interned as bits ``2*i``
(positive) and ``2*i + 1`` (negative) so that closures run on integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .core import (
    DEFAULT_ATOM_LIMIT,
    AbductiveProgram,
    Alphabet,
    Clause,
    IntegrityConstraint,
    Literal,
    LogicProgram,
    check_guard,
    literal_completion,
)
from .errors import ContractError, DomainError

INTERNAL = "internal"
EXTERNAL = "external"


@dataclass(frozen=True)
class CausalRule:
    """``cause => effect``; an empty cause stands for ``⊤``."""

    cause: tuple[Literal, ...]
    effect: Literal

    def __post_init__(self):
        object.__setattr__(self, "cause", tuple(dict.fromkeys(self.cause)))

    @property
    def is_default(self) -> bool:
        return self.cause == (self.effect,)

    def atoms(self):
        yield from (l.atom for l in self.cause)
        yield self.effect.atom

    def __str__(self):
        return f"{', '.join(map(str, self.cause))} => {self.effect}".lstrip()


@dataclass(frozen=True)
class CausalTheory:
    rules: tuple[CausalRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(dict.fromkeys(self.rules)))

    @property
    def atomic(self) -> bool:
        return all(r.effect.positive for r in self.rules)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


@dataclass(frozen=True, eq=False)
class CausalSystem:
    """Causal knowledge, external premises and observations over an alphabet.

    Equality ignores the order of the external premises.
    """

    knowledge: CausalTheory
    external: tuple[Literal, ...]
    observations: tuple[IntegrityConstraint, ...] = ()
    alphabet: Alphabet = field(default_factory=Alphabet)

    def __eq__(self, other):
        if not isinstance(other, CausalSystem):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.knowledge == other.knowledge
                and frozenset(self.external) == frozenset(other.external)
                and self.observations == other.observations)

    def __hash__(self):
        return hash((self.alphabet, self.knowledge, frozenset(self.external),
                     self.observations))

    @property
    def atomic(self) -> bool:
        return self.knowledge.atomic

    @property
    def applies_default_negation(self) -> bool:
        ext = set(self.external)
        if any(Literal(a, False) not in ext for a in self.alphabet):
            return False
        return not any(r.effect in ext for r in self.knowledge)

    def satisfies_observations(self, world) -> bool:
        return all(o.satisfied_by(world) for o in self.observations)


@dataclass(frozen=True)
class FoundingReport:
    """Why a world is or is not causally founded."""

    world: frozenset[str]
    observations_hold: bool
    unexplained: frozenset[Literal]      # true in the world, not derivable from its premises
    wrongly_derived: frozenset[Literal]  # derivable, yet false in the world

    @property
    def founded(self) -> bool:
        return self.observations_hold and not self.unexplained and not self.wrongly_derived

    def violations(self) -> list[str]:
        out = []
        if not self.observations_hold:
            out.append("observations violated")
        if self.wrongly_derived:
            out.append("natural necessity (derivable but false): "
                       + ", ".join(sorted(map(str, self.wrongly_derived))))
        if self.unexplained:
            out.append("sufficient causation (true but unexplained): "
                       + ", ".join(sorted(map(str, self.unexplained))))
        return out


def _lit_bit(alphabet: Alphabet, lit: Literal) -> int:
    return 1 << (2 * alphabet.index[lit.atom] + (0 if lit.positive else 1))


def _lits_mask(alphabet: Alphabet, lits: Iterable[Literal]) -> int:
    m = 0
    for l in lits:
        m |= _lit_bit(alphabet, l)
    return m


def _unmask_lits(alphabet: Alphabet, mask: int) -> frozenset[Literal]:
    out = []
    for i, a in enumerate(alphabet.atoms):
        if mask >> 2 * i & 1:
            out.append(Literal(a, True))
        if mask >> 2 * i + 1 & 1:
            out.append(Literal(a, False))
    return frozenset(out)


def _world_lits(n: int, w: int) -> int:
    m = 0
    for i in range(n):
        m |= 1 << (2 * i + (0 if w >> i & 1 else 1))
    return m


@lru_cache(maxsize=4096)
def _compile(theory: CausalTheory, alphabet: Alphabet) -> tuple[tuple[int, int], ...]:
    for r in theory:
        for a in r.atoms():
            if a not in alphabet:
                raise ContractError(f"atom {a!r} of rule {r} is not in the alphabet")
    return tuple((_lits_mask(alphabet, r.cause), _lit_bit(alphabet, r.effect)) for r in theory)


def _even_mask(n: int) -> int:
    return int("01" * n, 2) if n else 0


def _closure(rules: tuple[tuple[int, int], ...], n: int, premises: int) -> int:
    everything = (1 << 2 * n) - 1
    even = _even_mask(n)
    if premises >> 1 & premises & even:
        return everything
    derived = 0
    changed = True
    while changed:
        changed = False
        state = premises | derived
        for cause, effect in rules:
            if not derived & effect and state & cause == cause:
                derived |= effect
                state |= effect
                changed = True
                if state >> 1 & state & even:
                    return everything
    return derived


def _alphabet_for(theory: CausalTheory, premises: Iterable[Literal], alphabet) -> Alphabet:
    if alphabet is not None:
        return alphabet
    seen: dict[str, None] = {}
    for r in theory:
        seen.update(dict.fromkeys(r.atoms()))
    seen.update(dict.fromkeys(l.atom for l in premises))
    return Alphabet(tuple(seen))


def derivable(
    theory: CausalTheory, premises: Iterable[Literal], alphabet: Alphabet | None = None
) -> frozenset[Literal]:
    """All literals the premises explain under ``theory``.

    Least fixpoint of rule application; once the premises together with what
    has been derived contain a complementary pair, every literal over the
    alphabet is explained.
    """
    premises = frozenset(premises)
    alphabet = _alphabet_for(theory, premises, alphabet)
    rules = _compile(theory, alphabet)
    return _unmask_lits(alphabet, _closure(rules, len(alphabet), _lits_mask(alphabet, premises)))


def bochman_transform(ap: AbductiveProgram) -> CausalSystem:
    knowledge = CausalTheory(tuple(CausalRule(c.body, Literal(c.head)) for c in ap.clauses))
    external = tuple(Literal(a) for a in ap.abducibles) + tuple(
        Literal(a, False) for a in ap.alphabet
    )
    return CausalSystem(knowledge, external, ap.constraints, ap.alphabet)


def inverse_bochman(cs: CausalSystem) -> AbductiveProgram:
    if not cs.atomic:
        raise DomainError("causal knowledge has a negative effect; it is not atomic")
    if not cs.applies_default_negation:
        raise DomainError("causal system does not apply default negation")
    clauses = tuple(Clause(r.effect.atom, r.cause) for r in cs.knowledge)
    abducibles = tuple(l.atom for l in cs.external if l.positive)
    return AbductiveProgram(LogicProgram(cs.alphabet, clauses), abducibles, cs.observations)


def explanatory_closure(cs: CausalSystem) -> CausalTheory:
    """Knowledge plus a default rule ``l => l`` for every external premise."""
    defaults = tuple(CausalRule((l,), l) for l in cs.external)
    return CausalTheory(cs.knowledge.rules + defaults)


def completion_worlds(
    theory: CausalTheory, alphabet: Alphabet, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT
) -> list[frozenset[str]]:
    """Worlds satisfying ``l <-> OR of causes of l`` for every literal ``l``."""
    check_guard(alphabet, atom_limit)
    by_effect: dict[Literal, list[tuple[Literal, ...]]] = {}
    for r in theory:
        by_effect.setdefault(r.effect, []).append(r.cause)
    out = []
    for w in range(1 << len(alphabet)):
        world = alphabet.unmask(w)
        ok = True
        for a in alphabet:
            for lit in (Literal(a, True), Literal(a, False)):
                caused = any(all(b.holds_in(world) for b in cause)
                             for cause in by_effect.get(lit, ()))
                if lit.holds_in(world) != caused:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(world)
    return alphabet.sort_worlds(out)


def causal_worlds(
    theory: CausalTheory,
    alphabet: Alphabet,
    *,
    atom_limit: int | None = DEFAULT_ATOM_LIMIT,
    verify: bool = True,
) -> list[frozenset[str]]:
    """Worlds whose literal completion explains exactly itself.

    With ``verify`` the result is cross-checked against the models of the
    completion of ``theory``.
    """
    check_guard(alphabet, atom_limit)
    rules = _compile(theory, alphabet)
    n = len(alphabet)
    masks = [w for w in range(1 << n) if _closure(rules, n, _world_lits(n, w)) == _world_lits(n, w)]
    worlds = alphabet.sort_worlds(alphabet.unmask(w) for w in masks)
    if verify and worlds != completion_worlds(theory, alphabet, atom_limit=None):
        raise RuntimeError("causal worlds disagree with the completion of the theory")
    return worlds


def founding_report(cs: CausalSystem, world) -> FoundingReport:
    world = frozenset(world)
    alphabet = cs.alphabet
    lits = literal_completion(world, alphabet)
    closure = explanatory_closure(cs)
    explained = derivable(closure, lits & set(cs.external), alphabet)
    return FoundingReport(
        world,
        cs.satisfies_observations(world),
        frozenset(lits - explained),
        frozenset(explained - lits),
    )


def causally_founded_worlds(
    cs: CausalSystem,
    alphabet: Alphabet | None = None,
    *,
    atom_limit: int | None = DEFAULT_ATOM_LIMIT,
) -> list[frozenset[str]]:
    """Worlds meeting the observations whose true literals are exactly those
    explained by their own external premises under the explanatory closure."""
    alphabet = cs.alphabet if alphabet is None else alphabet
    if alphabet != cs.alphabet:
        cs = CausalSystem(cs.knowledge, cs.external, cs.observations, alphabet)
    check_guard(alphabet, atom_limit)
    n = len(alphabet)
    rules = _compile(explanatory_closure(cs), alphabet)
    ext = _lits_mask(alphabet, cs.external)
    out = []
    for w in range(1 << n):
        lits = _world_lits(n, w)
        explained = _closure(rules, n, lits & ext)
        # both directions are tested separately; equality alone would do
        necessity = explained & ~lits == 0
        sufficiency = lits & ~explained == 0
        if necessity and sufficiency:
            world = alphabet.unmask(w)
            if cs.satisfies_observations(world):
                out.append(world)
    return alphabet.sort_worlds(out)


@dataclass(frozen=True)
class ExplanationClass:
    kind: str  # internal | external
    world: frozenset[str]
    atoms: frozenset[str]


def classify_explanation(
    cause: Iterable[Literal], effect: Literal, w, i: Iterable[str]
) -> ExplanationClass:
    """I-external when ``effect`` is in ``i`` and every cause literal is true in
    ``w`` and outside ``i``; I-internal otherwise."""
    w, i = frozenset(w), frozenset(i)
    if not i <= w:
        raise ContractError("the atom set must consist of atoms true in the world")
    outside = all(l.holds_in(w) and not (l.positive and l.atom in i) for l in cause)
    external = effect.positive and effect.atom in i and outside
    return ExplanationClass(EXTERNAL if external else INTERNAL, w, i)
