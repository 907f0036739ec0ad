"""
Stage 4 - combinatorial vanishing criteria for the lambda-eigenspaces of the
Milnor fiber cohomology, lambda of order m.

Both checkers search every choice of removed hyperplane (last index first,
then ascending) and every choice of which component of the dual (m)-graph
plays the role of component 1.  The first success wins and is returned as a
replayable ``Certificate``; otherwise the result is Inconclusive, never a
claim of nonvanishing.

  T1-connected   the dual (m)-graph minus the removed hyperplane is connected
  T1-branch2     every other component is a single hyperplane, those
                 hyperplanes meet in codimension <= 2 and A is essential
  T2             each other component k has a witness flat Z: m | nu(Z), Z
                 avoids the removed hyperplane, Z only meets components 1 and
                 k (both nontrivially) and the sum of |Z cap k| distinct
                 m-th roots of unity can never vanish
  TrivialOrder   m does not divide d, so the eigenspace is zero

Public API
----------
dual_m_graph, components            (re-exported from dualgraph)
removal_scan(A, m)                  -> RemovalScan
check_theorem1(A, m)                -> Certificate
check_theorem2(A, m)                -> Certificate
verify_certificate(A, cert)         -> bool
analyze_all(A, jobs=1)              -> AnalysisReport
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, Field

from ... import __version__
from .arrangement import Arrangement, Flat2, flat_census, is_essential, normal_rank, rank2_flats
from .certificates import (
    Certificate,
    Check,
    Checker,
    ReplayContext,
    Status,
    Theorem,
    Witness,
    evaluate,
)
from .dualgraph import Component, DualMGraph, components, dual_m_graph, find_witness
from .errors import CertificateMismatch

logger = logging.getLogger(__name__)

__all__ = [
    "AnalysisReport",
    "DualMGraph",
    "OrderAnalysis",
    "RemovalScan",
    "analyze_all",
    "check_theorem1",
    "check_theorem2",
    "components",
    "dual_m_graph",
    "removal_order",
    "removal_scan",
    "verify_certificate",
]

SMALL_ORDERS = range(2, 7)


def removal_order(d: int) -> list[int]:
    return [d - 1] + list(range(d - 1))


def _require_lines(arrangement: Arrangement, lattice_only: bool) -> None:
    if arrangement.ambient_dim > 3 and not lattice_only:
        raise ValueError(
            f"criteria work on rank-2 flats of line arrangements; ambient_dim is "
            f"{arrangement.ambient_dim}: take a generic_section first or pass lattice_only"
        )


def _listed(parts: Sequence[Component]) -> list[list[int]]:
    return [list(p) for p in parts]


@dataclass(frozen=True)
class RemovalScan:
    m: int
    r: int
    r_prime: dict[int, int]


def removal_scan(arrangement: Arrangement, m: int, flats: Optional[Sequence[Flat2]] = None) -> RemovalScan:
    """r_m (no removal) and r'_m for every choice of removed hyperplane."""
    flats = flats if flats is not None else rank2_flats(arrangement)
    r = len(components(dual_m_graph(arrangement, m, None, flats)))
    r_prime = {
        removed: len(components(dual_m_graph(arrangement, m, removed, flats)))
        for removed in range(arrangement.d)
    }
    return RemovalScan(m, r, r_prime)


def _trivial_order(arrangement: Arrangement, m: int, checker: Checker) -> Certificate:
    return Certificate(
        arrangement_hash=arrangement.content_hash,
        m=m,
        checker=checker,
        status=Status.vanishes,
        theorem=Theorem.trivial_order,
        checks=[Check(predicate="divides", args={"m": m, "d": arrangement.d}, result=False)],
    )


def _inconclusive(
    arrangement: Arrangement,
    m: int,
    checker: Checker,
    flats: Sequence[Flat2],
    checks: list[Check],
) -> Certificate:
    parts = components(dual_m_graph(arrangement, m, None, flats))
    return Certificate(
        arrangement_hash=arrangement.content_hash,
        m=m,
        checker=checker,
        status=Status.inconclusive,
        partition=_listed(parts),
        checks=checks,
    )


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------


def check_theorem1(arrangement: Arrangement, m: int, lattice_only: bool = False) -> Certificate:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    _require_lines(arrangement, lattice_only)
    d = arrangement.d
    if d % m:
        return _trivial_order(arrangement, m, Checker.theorem1)

    divides = Check(predicate="divides", args={"m": m, "d": d}, result=True)
    flats = rank2_flats(arrangement)
    essential = is_essential(arrangement)
    failures: list[Check] = [divides]

    for removed in removal_order(d):
        parts = components(dual_m_graph(arrangement, m, removed, flats))
        partition = Check(
            predicate="partition",
            args={"removed": removed, "components": _listed(parts)},
            result=True,
        )
        if len(parts) == 1:
            logger.info("criteria: T1 VANISHES | m=%d removed=%d theorem=T1-connected", m, removed)
            return Certificate(
                arrangement_hash=arrangement.content_hash,
                m=m,
                checker=Checker.theorem1,
                status=Status.vanishes,
                theorem=Theorem.t1_connected,
                removed_index=removed,
                first_component=0,
                partition=_listed(parts),
                checks=[divides, partition],
            )

        failures.append(
            Check(predicate="component_count", args={"removed": removed, "count": len(parts)}, result=True)
        )
        for first in range(len(parts)):
            if any(len(p) != 1 for k, p in enumerate(parts) if k != first):
                failures.append(
                    Check(predicate="singletons", args={"removed": removed, "first": first}, result=False)
                )
                continue
            indices = [p[0] for k, p in enumerate(parts) if k != first]
            if normal_rank(arrangement, indices) > 2:
                failures.append(Check(predicate="rank_le_2", args={"indices": indices}, result=False))
                continue
            if not essential:
                failures.append(Check(predicate="essential", args={}, result=False))
                continue
            logger.info(
                "criteria: T1 VANISHES | m=%d removed=%d first=%d theorem=T1-branch2", m, removed, first
            )
            return Certificate(
                arrangement_hash=arrangement.content_hash,
                m=m,
                checker=Checker.theorem1,
                status=Status.vanishes,
                theorem=Theorem.t1_branch2,
                removed_index=removed,
                first_component=first,
                partition=_listed(parts),
                checks=[
                    divides,
                    partition,
                    Check(predicate="singletons", args={"removed": removed, "first": first}, result=True),
                    Check(predicate="rank_le_2", args={"indices": indices}, result=True),
                    Check(predicate="essential", args={}, result=True),
                ],
            )

    logger.info("criteria: T1 INCONCLUSIVE | m=%d d=%d", m, d)
    return _inconclusive(arrangement, m, Checker.theorem1, flats, failures)


def check_theorem2(arrangement: Arrangement, m: int, lattice_only: bool = False) -> Certificate:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    _require_lines(arrangement, lattice_only)
    d = arrangement.d
    if d % m:
        return _trivial_order(arrangement, m, Checker.theorem2)

    divides = Check(predicate="divides", args={"m": m, "d": d}, result=True)
    flats = rank2_flats(arrangement)
    failures: list[Check] = [divides]

    for removed in removal_order(d):
        parts = components(dual_m_graph(arrangement, m, removed, flats))
        partition = Check(
            predicate="partition",
            args={"removed": removed, "components": _listed(parts)},
            result=True,
        )
        failures.append(
            Check(predicate="component_count", args={"removed": removed, "count": len(parts)}, result=True)
        )
        for first in range(len(parts)):
            witnesses: list[Witness] = []
            for k in range(len(parts)):
                if k == first:
                    continue
                found = find_witness(flats, m, removed, parts[first], parts[k])
                if found is None:
                    failures.append(
                        Check(
                            predicate="witness_search",
                            args={"removed": removed, "first": first, "k": k},
                            result=False,
                        )
                    )
                    break
                flat, first_trace, k_trace = found
                witnesses.append(
                    Witness(k=k, flat=list(flat.incident), first_trace=first_trace, k_trace=k_trace)
                )
            else:
                checks = [divides, partition]
                for w in witnesses:
                    checks.append(
                        Check(
                            predicate="witness",
                            args={"removed": removed, "first": first, "k": w.k, "flat": w.flat},
                            result=True,
                        )
                    )
                    checks.append(
                        Check(
                            predicate="nonvanishing_guaranteed",
                            args={"m": m, "size": len(w.k_trace)},
                            result=True,
                        )
                    )
                logger.info(
                    "criteria: T2 VANISHES | m=%d removed=%d first=%d witnesses=%d",
                    m,
                    removed,
                    first,
                    len(witnesses),
                )
                return Certificate(
                    arrangement_hash=arrangement.content_hash,
                    m=m,
                    checker=Checker.theorem2,
                    status=Status.vanishes,
                    theorem=Theorem.t2,
                    removed_index=removed,
                    first_component=first,
                    partition=_listed(parts),
                    witnesses=witnesses,
                    checks=checks,
                )

    logger.info("criteria: T2 INCONCLUSIVE | m=%d d=%d", m, d)
    return _inconclusive(arrangement, m, Checker.theorem2, flats, failures)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _has(cert: Certificate, predicate: str, args: dict, result: bool = True) -> bool:
    return any(c.args == args and c.result is result for c in cert.check(predicate))


def _proves(cert: Certificate, ctx: ReplayContext) -> bool:
    """Structural sufficiency: the (already replayed) checks form a complete proof."""
    arrangement = ctx.arrangement
    m, d = cert.m, arrangement.d
    if cert.theorem is Theorem.trivial_order:
        return _has(cert, "divides", {"m": m, "d": d}, result=False)
    if not _has(cert, "divides", {"m": m, "d": d}):
        return False

    removed = cert.removed_index
    partition = cert.partition
    if removed is None or not _has(cert, "partition", {"removed": removed, "components": partition}):
        return False
    first = cert.first_component

    if cert.theorem is Theorem.t1_connected:
        return cert.checker is Checker.theorem1 and len(partition) == 1
    if first is None or not 0 <= first < len(partition):
        return False

    if cert.theorem is Theorem.t1_branch2:
        others = [p for k, p in enumerate(partition) if k != first]
        if cert.checker is not Checker.theorem1 or not others or any(len(p) != 1 for p in others):
            return False
        return (
            _has(cert, "singletons", {"removed": removed, "first": first})
            and _has(cert, "rank_le_2", {"indices": [p[0] for p in others]})
            and _has(cert, "essential", {})
        )

    if cert.theorem is Theorem.t2:
        if cert.checker is not Checker.theorem2:
            return False
        by_k = {w.k: w for w in cert.witnesses}
        for k in range(len(partition)):
            if k == first:
                continue
            w = by_k.get(k)
            if w is None:
                return False
            if w.first_trace != [i for i in w.flat if i in partition[first]]:
                return False
            if w.k_trace != [i for i in w.flat if i in partition[k]]:
                return False
            if not _has(cert, "witness", {"removed": removed, "first": first, "k": k, "flat": w.flat}):
                return False
            if not _has(cert, "nonvanishing_guaranteed", {"m": m, "size": len(w.k_trace)}):
                return False
        return True
    return False


def verify_certificate(arrangement: Arrangement, cert: Certificate) -> bool:
    """
    Independent replay: re-evaluate every logged check from scratch, then
    confirm the checks prove the claimed theorem (Vanishes) or that the
    checker really finds nothing (Inconclusive).
    """
    if cert.arrangement_hash != arrangement.content_hash:
        raise CertificateMismatch(
            f"certificate is for arrangement {cert.arrangement_hash[:12]}..., "
            f"got {arrangement.content_hash[:12]}..."
        )
    ctx = ReplayContext.build(arrangement, cert.m)
    for check in cert.checks:
        if evaluate(ctx, check) is not check.result:
            logger.info("criteria: REPLAY FAILED | predicate=%s args=%s", check.predicate, check.args)
            return False

    if cert.status is Status.inconclusive:
        rerun = check_theorem1 if cert.checker is Checker.theorem1 else check_theorem2
        return rerun(arrangement, cert.m, lattice_only=True).status is Status.inconclusive
    return _proves(cert, ctx)


# ---------------------------------------------------------------------------
# Whole-arrangement analysis
# ---------------------------------------------------------------------------


class OrderAnalysis(BaseModel):
    m: int
    status: Status
    theorem: Optional[Theorem] = None
    r: Optional[int] = None
    r_prime: dict[int, int] = Field(default_factory=dict)
    theorem1: Certificate
    theorem2: Certificate


class AnalysisReport(BaseModel):
    tool_version: str = __version__
    arrangement_hash: str
    seed: Optional[int] = None
    d: int
    ambient_dim: int
    field_order: int
    census: dict[int, int]
    orders: list[OrderAnalysis]


def _analyze_order(arrangement: Arrangement, m: int, flats: Sequence[Flat2], lattice_only: bool) -> OrderAnalysis:
    first = check_theorem1(arrangement, m, lattice_only)
    second = check_theorem2(arrangement, m, lattice_only)
    winner = first if first.status is Status.vanishes else second
    if arrangement.d % m:
        return OrderAnalysis(m=m, status=winner.status, theorem=winner.theorem, theorem1=first, theorem2=second)
    scan = removal_scan(arrangement, m, flats)
    return OrderAnalysis(
        m=m,
        status=winner.status,
        theorem=winner.theorem,
        r=scan.r,
        r_prime=scan.r_prime,
        theorem1=first,
        theorem2=second,
    )


def analysis_orders(d: int, small_orders: Iterable[int] = SMALL_ORDERS) -> list[int]:
    """Every divisor m >= 2 of d, plus the small non-divisors as TrivialOrder entries."""
    return sorted({m for m in range(2, d + 1) if d % m == 0} | {m for m in small_orders if m >= 2})


def analyze_all(
    arrangement: Arrangement,
    jobs: int = 1,
    lattice_only: bool = False,
    orders: Optional[Iterable[int]] = None,
) -> AnalysisReport:
    _require_lines(arrangement, lattice_only)
    flats = rank2_flats(arrangement)
    chosen = sorted(set(orders)) if orders is not None else analysis_orders(arrangement.d)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(lambda m: _analyze_order(arrangement, m, flats, lattice_only), chosen))

    logger.info(
        "criteria: ANALYSIS | d=%d orders=%s vanishing=%s",
        arrangement.d,
        chosen,
        [r.m for r in results if r.status is Status.vanishes],
    )
    return AnalysisReport(
        arrangement_hash=arrangement.content_hash,
        d=arrangement.d,
        ambient_dim=arrangement.ambient_dim,
        field_order=arrangement.field_order,
        census=flat_census(flats),
        orders=results,
    )
