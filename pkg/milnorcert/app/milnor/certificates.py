"""
Vanishing certificates and the predicate registry used to replay them.

A certificate records every predicate the checker evaluated as a ``Check``
(predicate name, JSON arguments, result).  Replaying re-evaluates each check
from the arrangement alone through ``PREDICATES``; the criteria module adds
the structural test that the recorded checks actually make up a proof.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from pydantic import BaseModel, Field

from ... import __version__
from .arrangement import Arrangement, Flat2, is_essential, normal_rank, rank2_flats
from .cyclo import nonvanishing_guaranteed
from .dualgraph import Component, components, dual_m_graph, find_witness, witness_traces


class Status(str, Enum):
    vanishes = "Vanishes"
    inconclusive = "Inconclusive"


class Theorem(str, Enum):
    t1_connected = "T1-connected"
    t1_branch2 = "T1-branch2"
    t2 = "T2"
    trivial_order = "TrivialOrder"


class Checker(str, Enum):
    theorem1 = "T1"
    theorem2 = "T2"


class Check(BaseModel):
    predicate: str
    args: dict[str, Any] = Field(default_factory=dict)
    result: bool


class Witness(BaseModel):
    k: int = Field(..., ge=0)
    flat: list[int]
    first_trace: list[int]
    k_trace: list[int]


class Certificate(BaseModel):
    tool_version: str = __version__
    arrangement_hash: str
    m: int = Field(..., ge=2)
    checker: Checker
    status: Status
    theorem: Optional[Theorem] = None
    removed_index: Optional[int] = None
    first_component: Optional[int] = None
    partition: list[list[int]] = Field(default_factory=list)
    witnesses: list[Witness] = Field(default_factory=list)
    checks: list[Check] = Field(default_factory=list)

    def check(self, predicate: str) -> list[Check]:
        return [c for c in self.checks if c.predicate == predicate]


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


@dataclass
class ReplayContext:
    """Arrangement data shared by every predicate of one replay."""

    arrangement: Arrangement
    m: int
    flats: list[Flat2] = field(default_factory=list)
    _partitions: dict[Optional[int], list[Component]] = field(default_factory=dict)

    @classmethod
    def build(cls, arrangement: Arrangement, m: int) -> "ReplayContext":
        return cls(arrangement, m, rank2_flats(arrangement))

    def partition(self, removed: Optional[int]) -> list[Component]:
        if removed not in self._partitions:
            graph = dual_m_graph(self.arrangement, self.m, removed, self.flats)
            self._partitions[removed] = components(graph)
        return self._partitions[removed]

    def flat(self, incident: list[int]) -> Optional[Flat2]:
        key = tuple(incident)
        return next((f for f in self.flats if f.incident == key), None)


Predicate = Callable[..., bool]


def _divides(ctx: ReplayContext, m: int, d: int) -> bool:
    if m != ctx.m or d != ctx.arrangement.d:
        return False
    return d % m == 0


def _component_count(ctx: ReplayContext, removed: Optional[int], count: int) -> bool:
    return len(ctx.partition(removed)) == count


def _partition(ctx: ReplayContext, removed: Optional[int], components: list[list[int]]) -> bool:
    return [list(c) for c in ctx.partition(removed)] == components


def _singletons(ctx: ReplayContext, removed: Optional[int], first: int) -> bool:
    parts = ctx.partition(removed)
    if not 0 <= first < len(parts):
        return False
    return all(len(p) == 1 for k, p in enumerate(parts) if k != first)


def _rank_le_2(ctx: ReplayContext, indices: list[int]) -> bool:
    return normal_rank(ctx.arrangement, indices) <= 2


def _essential(ctx: ReplayContext) -> bool:
    return is_essential(ctx.arrangement)


def _witness(ctx: ReplayContext, removed: Optional[int], first: int, k: int, flat: list[int]) -> bool:
    parts = ctx.partition(removed)
    candidate = ctx.flat(flat)
    if candidate is None or k == first or not (0 <= first < len(parts) and 0 <= k < len(parts)):
        return False
    traces = witness_traces(candidate, ctx.m, removed, set(parts[first]), set(parts[k]))
    return traces is not None and nonvanishing_guaranteed(ctx.m, len(traces[1]))


def _witness_search(ctx: ReplayContext, removed: Optional[int], first: int, k: int) -> bool:
    parts = ctx.partition(removed)
    return find_witness(ctx.flats, ctx.m, removed, parts[first], parts[k]) is not None


def _nonvanishing(ctx: ReplayContext, m: int, size: int) -> bool:
    return m == ctx.m and nonvanishing_guaranteed(m, size)


PREDICATES: dict[str, Predicate] = {
    "divides": _divides,
    "component_count": _component_count,
    "partition": _partition,
    "singletons": _singletons,
    "rank_le_2": _rank_le_2,
    "essential": _essential,
    "witness": _witness,
    "witness_search": _witness_search,
    "nonvanishing_guaranteed": _nonvanishing,
}


def evaluate(ctx: ReplayContext, check: Check) -> Optional[bool]:
    """Re-evaluate one check; None when the predicate is unknown or its arguments are malformed."""
    predicate = PREDICATES.get(check.predicate)
    if predicate is None:
        return None
    try:
        return bool(predicate(ctx, **check.args))
    except (TypeError, ValueError, KeyError, IndexError):
        return None
