"""Decision procedures for causal irrelevance and non-interference."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import AbductiveProgram, Alphabet, LogicProgram, check_guard
from .errors import ContractError
from .graph import dependence_graph, descendants, is_stratified, regions, slice_program
from .intervention import Assignment, intervene
from .semantics import STABLE, abductive_models, has_stable_model, inconsistent_explanations

DEFAULT_IRRELEVANCE_LIMIT = 12

IRRELEVANCE = "irrelevance"
INCONSISTENCY = "inconsistency"


@dataclass(frozen=True)
class Counterexample:
    """A program built from ``ap`` that has no stable model.

    For ``kind == "irrelevance"`` it is the descendant slice of ``s`` plus the
    true atoms of ``world`` (a structure over ``domain``) as facts. For
    ``kind == "inconsistency"`` ``s`` is empty and ``world`` is an explanation
    whose program ``P ∪ world`` has no stable model.
    """

    kind: str
    s: frozenset[str]
    world: frozenset[str]
    domain: tuple[str, ...]
    program: LogicProgram

    def rebuild(self, ap: AbductiveProgram) -> LogicProgram:
        if self.kind == INCONSISTENCY:
            return ap.program.with_facts(self.world)
        return slice_program(ap.program, self.s, "above").with_facts(self.world)

    def replay(self, ap: AbductiveProgram) -> bool:
        """True when the failure reproduces on ``ap``."""
        prog = self.rebuild(ap)
        return prog == self.program and not has_stable_model(prog, atom_limit=None)


@dataclass(frozen=True)
class IrrelevanceVerdict:
    holds: bool
    counterexample: Counterexample | None = None
    inconsistent_explanation: frozenset[str] | None = None

    @property
    def consistent(self) -> bool:
        return self.inconsistent_explanation is None


def _subsets_by_size(atoms: tuple[str, ...]):
    for k in range(len(atoms) + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


def _structures(alphabet: Alphabet, domain: tuple[str, ...]):
    worlds = [frozenset(a for i, a in enumerate(domain) if m >> i & 1)
              for m in range(1 << len(domain))]
    return alphabet.sort_worlds(worlds)


def irrelevance_failures(ap: AbductiveProgram, *, dedupe: bool = True):
    """Yield every ``(S, world)`` pair whose descendant program has no stable model.

    With ``dedupe`` sets ``S`` sharing the same descendants are visited once.
    """
    p = ap.program
    alphabet = p.alphabet
    g = dependence_graph(p)
    seen: set[frozenset[str]] = set()
    for s in _subsets_by_size(alphabet.atoms):
        above = descendants(g, s)
        if dedupe:
            if above in seen:
                continue
            seen.add(above)
        sliced = LogicProgram(alphabet, tuple(c for c in p.clauses if c.head in above))
        domain = tuple(a for a in alphabet if a not in above)
        for world in _structures(alphabet, domain):
            prog = sliced.with_facts(world)
            if not has_stable_model(prog, atom_limit=None):
                yield Counterexample(IRRELEVANCE, s, world, domain, prog)


def check_irrelevance(
    ap: AbductiveProgram, *, atom_limit: int | None = DEFAULT_IRRELEVANCE_LIMIT
) -> IrrelevanceVerdict:
    """Search for a set ``S`` and a structure on its non-descendants that the
    descendant clauses cannot extend to a stable model.

    Subsets are visited by increasing size and structures in canonical order;
    the first failure is reported. An inconsistent program always fails: when
    no such pair exists its counterexample is the failing explanation.
    """
    check_guard(ap.alphabet, atom_limit, "irrelevance check")
    bad = inconsistent_explanations(ap, atom_limit=None)
    eps = bad[0] if bad else None
    cex = next(irrelevance_failures(ap), None)
    if cex is None and eps is not None:
        cex = Counterexample(INCONSISTENCY, frozenset(), eps, tuple(ap.abducibles),
                             ap.program.with_facts(eps))
    return IrrelevanceVerdict(cex is None, cex, eps)


@dataclass(frozen=True)
class NonInterferenceReport:
    s: frozenset[str]
    assignment: Assignment
    sub_alphabet: Alphabet
    reducts_of_p: frozenset[frozenset[str]]
    stable_of_below: frozenset[frozenset[str]]
    reducts_of_pi: frozenset[frozenset[str]]

    @property
    def equivalent(self) -> bool:
        return self.reducts_of_p == self.stable_of_below == self.reducts_of_pi


def _reducts(ap: AbductiveProgram, below: frozenset[str]) -> frozenset[frozenset[str]]:
    return frozenset(m.world & below for m in abductive_models(ap, STABLE, atom_limit=None))


def check_non_interference(
    ap: AbductiveProgram,
    s: Iterable[str],
    a: Assignment,
    *,
    atom_limit: int | None = DEFAULT_IRRELEVANCE_LIMIT,
) -> NonInterferenceReport:
    """Compare the reducts to the non-descendants of ``s`` of the stable models
    of the program, of its lower slice, and of the program after intervening."""
    s = frozenset(s)
    check_guard(ap.alphabet, atom_limit, "non-interference check")
    if ap.constraints:
        raise ContractError("non-interference is defined for programs without integrity constraints")
    if a.atoms() != s:
        raise ContractError("the assignment must cover exactly the intervened set")
    if s & set(ap.abducibles):
        raise ContractError("the intervened set must not contain abducibles")
    below, _, _ = regions(ap.program, s)
    lower = ap.replace(program=slice_program(ap.program, s, "below"))
    return NonInterferenceReport(
        s,
        a,
        ap.alphabet.restrict(below),
        _reducts(ap, below),
        _reducts(lower, below),
        _reducts(intervene(ap, a), below),
    )


def check_stratified_irrelevance(
    ap: AbductiveProgram,
    *,
    atom_limit: int | None = DEFAULT_IRRELEVANCE_LIMIT,
    verify: bool = False,
) -> bool:
    """Whether the program is stratified, which suffices for causal irrelevance.

    With ``verify`` a stratified program is also run through
    :func:`check_irrelevance` and a failure raises ``RuntimeError``.
    """
    check_guard(ap.alphabet, atom_limit, "stratification check")
    stratified = is_stratified(dependence_graph(ap.program))
    if verify and stratified and not check_irrelevance(ap, atom_limit=None).holds:
        raise RuntimeError("stratified program fails causal irrelevance")
    return stratified
