"""
Dual (m)-graph of an arrangement.

Vertices are hyperplane indices (minus the removed one, if any).  Two
vertices are joined when the flat containing both has multiplicity not
divisible by m and does not contain the removed hyperplane.  At rank-2 flat
level no flat lies in a codimension-3 triple intersection, so that part of
the removed locus never deletes an edge.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Collection, Optional, Sequence

import networkx as nx

from .arrangement import Arrangement, Flat2, rank2_flats
from .cyclo import nonvanishing_guaranteed

Component = tuple[int, ...]


@dataclass(frozen=True)
class DualMGraph:
    m: int
    removed: Optional[int]
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


def dual_m_graph(
    arrangement: Arrangement,
    m: int,
    removed: Optional[int] = None,
    flats: Optional[Sequence[Flat2]] = None,
) -> DualMGraph:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if removed is not None and not 0 <= removed < arrangement.d:
        raise ValueError(f"removed index {removed} out of range [0, {arrangement.d})")
    flats = flats if flats is not None else rank2_flats(arrangement)
    edges = set()
    for flat in flats:
        if flat.multiplicity % m == 0 or (removed is not None and removed in flat.incident):
            continue
        edges.update(itertools.combinations(flat.incident, 2))
    vertices = tuple(k for k in range(arrangement.d) if k != removed)
    return DualMGraph(m, removed, vertices, tuple(sorted(edges)))


def components(graph: DualMGraph) -> list[Component]:
    """Connected components, each sorted, ordered by smallest vertex."""
    parts = [tuple(sorted(c)) for c in nx.connected_components(graph.to_networkx())]
    return sorted(parts)


def witness_traces(
    flat: Flat2,
    m: int,
    removed: Optional[int],
    first: Collection[int],
    other: Collection[int],
) -> Optional[tuple[list[int], list[int]]]:
    """
    Traces (first_trace, other_trace) of ``flat`` when it can serve as the
    witness point joining components ``first`` and ``other``: m divides its
    multiplicity, it avoids the removed hyperplane, every incident hyperplane
    lies in one of the two components and both traces are nonempty.
    """
    if flat.multiplicity % m or (removed is not None and removed in flat.incident):
        return None
    first_trace = [i for i in flat.incident if i in first]
    other_trace = [i for i in flat.incident if i in other]
    if len(first_trace) + len(other_trace) != flat.multiplicity:
        return None
    if not first_trace or not other_trace:
        return None
    return first_trace, other_trace


def find_witness(
    flats: Sequence[Flat2],
    m: int,
    removed: Optional[int],
    first: Collection[int],
    other: Collection[int],
) -> Optional[tuple[Flat2, list[int], list[int]]]:
    first_set, other_set = set(first), set(other)
    for flat in flats:
        traces = witness_traces(flat, m, removed, first_set, other_set)
        if traces and nonvanishing_guaranteed(m, len(traces[1])):
            return flat, traces[0], traces[1]
    return None
