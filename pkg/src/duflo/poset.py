"""Finite posets on standard tableaux, with reach, covers and export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from duflo.tableaux import Tableau, format_tableau


@dataclass(frozen=True)
class TableauPoset:
    n: int
    nodes: tuple[Tableau, ...]
    reach: frozenset[tuple[Tableau, Tableau]]
    covers: frozenset[tuple[Tableau, Tableau]] = field(default=frozenset())

    @classmethod
    def from_relation(cls, n: int, nodes: Iterable[Tableau], relation: Iterable[tuple[Tableau, Tableau]]) -> "TableauPoset":
        """Close a generating relation reflexively and transitively, then take its Hasse diagram."""
        ordered = tuple(sorted(nodes, key=format_tableau))
        graph = nx.DiGraph()
        graph.add_nodes_from(ordered)
        graph.add_edges_from((a, b) for a, b in relation if a != b)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValueError("generating relation has a cycle; it does not define a partial order")
        closure = nx.transitive_closure_dag(graph)
        reach = frozenset(closure.edges()) | frozenset((t, t) for t in ordered)
        covers = frozenset(nx.transitive_reduction(graph).edges())
        return cls(n, ordered, reach, covers)

    def leq(self, a: Tableau, b: Tableau) -> bool:
        return (a, b) in self.reach

    def up_set(self, a: Tableau) -> set[Tableau]:
        return {b for (x, b) in self.reach if x == a}

    def covers_of(self, a: Tableau) -> set[Tableau]:
        return {b for (x, b) in self.covers if x == a}

    def to_json(self, with_reach: bool = False) -> dict:
        index = {t: k for k, t in enumerate(self.nodes)}
        doc = {
            "schema": 1,
            "n": self.n,
            "nodes": [format_tableau(t) for t in self.nodes],
            "covers": sorted([index[a], index[b]] for a, b in self.covers),
        }
        if with_reach:
            doc["reach"] = sorted([index[a], index[b]] for a, b in self.reach)
        return doc

    def to_dot(self) -> str:
        index = {t: k for k, t in enumerate(self.nodes)}
        lines = ["digraph duflo {"]
        for t in self.nodes:
            lines.append(f'  n{index[t]} [label={json.dumps(format_tableau(t))}];')
        for a, b in sorted(self.covers, key=lambda e: (index[e[0]], index[e[1]])):
            lines.append(f"  n{index[a]} -> n{index[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"
