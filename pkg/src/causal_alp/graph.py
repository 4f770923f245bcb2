"""Signed dependence graphs, stratification and program slices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from .core import Alphabet, LogicProgram
from .errors import ContractError

POSITIVE = "+"
NEGATIVE = "-"
BOTH = "+-"


@dataclass(frozen=True)
class DependenceGraph:
    nodes: Alphabet
    edges: tuple[tuple[str, str, str], ...]  # (from, to, sign)

    @cached_property
    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes.atoms)
        for u, v, sign in self.edges:
            g.add_edge(u, v, sign=sign)
        return g

    def sign(self, u: str, v: str) -> str | None:
        data = self.digraph.get_edge_data(u, v)
        return None if data is None else data["sign"]

    def to_dot(self) -> str:
        lines = ["digraph dependence {"]
        for a in self.nodes:
            lines.append(f'  "{a}";')
        for u, v, sign in self.edges:
            lines.append(f'  "{u}" -> "{v}" [label="{sign}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def dependence_graph(p: LogicProgram) -> DependenceGraph:
    signs: dict[tuple[str, str], set[str]] = {}
    for c in p.clauses:
        for lit in c.body:
            signs.setdefault((lit.atom, c.head), set()).add(
                POSITIVE if lit.positive else NEGATIVE
            )
    idx = p.alphabet.index
    edges = []
    for (u, v), s in sorted(signs.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]])):
        edges.append((u, v, BOTH if len(s) == 2 else next(iter(s))))
    return DependenceGraph(p.alphabet, tuple(edges))


def is_stratified(g: DependenceGraph) -> bool:
    """No strongly connected component holds a negative edge between its members."""
    component = {}
    for i, scc in enumerate(nx.strongly_connected_components(g.digraph)):
        for a in scc:
            component[a] = i
    return not any(
        NEGATIVE in sign and component[u] == component[v] for u, v, sign in g.edges
    )


def is_acyclic(g: DependenceGraph) -> bool:
    return nx.is_directed_acyclic_graph(g.digraph)


def _check_atoms(alphabet: Alphabet, s: Iterable[str]) -> frozenset[str]:
    s = frozenset(s)
    unknown = s - set(alphabet.atoms)
    if unknown:
        raise ContractError(f"unknown atoms {sorted(unknown)}")
    return s


def descendants(g: DependenceGraph, s: Iterable[str]) -> frozenset[str]:
    """Atoms outside ``s`` reachable from ``s`` along one or more edges."""
    s = _check_atoms(g.nodes, s)
    reach: set[str] = set()
    for a in s:
        reach |= nx.descendants(g.digraph, a)
    return frozenset(reach - s)


def regions(p: LogicProgram, s: Iterable[str]) -> tuple[frozenset, frozenset, frozenset]:
    """``(below, at, above)``: the non-descendants outside ``s``, ``s``, its descendants."""
    s = _check_atoms(p.alphabet, s)
    above = descendants(dependence_graph(p), s)
    below = frozenset(p.alphabet.atoms) - above - s
    return below, s, above


def slice_program(p: LogicProgram, s: Iterable[str], region: str) -> LogicProgram:
    """Clauses whose head lies above, below or at ``s``; the alphabet is kept."""
    below, at, above = regions(p, s)
    heads = {"above": above, "below": below, "at": at}.get(region)
    if heads is None:
        raise ContractError(f"unknown region {region!r}")
    return LogicProgram(p.alphabet, tuple(c for c in p.clauses if c.head in heads))
