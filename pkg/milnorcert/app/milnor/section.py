"""
Generic plane section: reduce an arrangement in P^(n-1), n > 3, to a line
arrangement in P^2 with the same rank-2 combinatorics.

A random integer n x 3 matrix S restricts each normal a_i to a_i^T S.  The
section is accepted only when it is reduced and its rank-2 flats have exactly
the incidence sets of the original flats; anything else (a zero or repeated
line, a new coincidence) is rejected and a fresh S is drawn.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..settings import max_retries
from .arrangement import Arrangement, Hyperplane, is_essential, rank2_flats
from .cyclo import CycloNum
from .errors import GenericityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectionResult:
    arrangement: Arrangement
    correspondence: list[tuple[int, int]]  # (flat index in source, flat index in section)
    basis: tuple[tuple[int, ...], ...]
    attempts: int
    seed: int


def _restrict(arrangement: Arrangement, basis: Sequence[Sequence[int]]) -> Arrangement:
    order = arrangement.field_order
    hyperplanes = []
    for hyperplane in arrangement.hyperplanes:
        normal = []
        for col in range(3):
            acc = CycloNum.zero(order)
            for row, coeff in enumerate(hyperplane.normal):
                if basis[row][col]:
                    acc = acc + coeff * int(basis[row][col])
            normal.append(acc)
        hyperplanes.append(Hyperplane(tuple(normal), hyperplane.label))
    return Arrangement(3, order, tuple(hyperplanes))


def generic_section(
    arrangement: Arrangement,
    seed: int,
    initial_basis: Optional[Sequence[Sequence[int]]] = None,
    retries: Optional[int] = None,
) -> SectionResult:
    n = arrangement.ambient_dim
    if n <= 3:
        raise ValueError(f"generic_section needs ambient_dim > 3, got {n}")
    if not is_essential(arrangement):
        logger.warning(
            "section: NON-ESSENTIAL input | d=%d ambient_dim=%d (sectioning the essentialisation)",
            arrangement.d,
            n,
        )
    if initial_basis is not None and (len(initial_basis) != n or any(len(r) != 3 for r in initial_basis)):
        raise ValueError(f"initial_basis must be a {n} x 3 integer matrix")

    source_flats = rank2_flats(arrangement)
    source_index = {flat.incident: k for k, flat in enumerate(source_flats)}
    budget = retries if retries is not None else max_retries()
    rng = np.random.default_rng(seed)
    failures = {"not_reduced": 0, "incidence_changed": 0}
    last_reason = ""

    for attempt in range(1, budget + 1):
        if attempt == 1 and initial_basis is not None:
            basis = tuple(tuple(int(v) for v in row) for row in initial_basis)
        else:
            height = 2 + attempt
            basis = tuple(tuple(int(v) for v in row) for row in rng.integers(-height, height + 1, size=(n, 3)))
        try:
            section = _restrict(arrangement, basis)
        except ValueError as exc:
            failures["not_reduced"] += 1
            last_reason = str(exc)
            continue
        flats = rank2_flats(section)
        if {flat.incident for flat in flats} != set(source_index):
            failures["incidence_changed"] += 1
            last_reason = f"section has {len(flats)} flats, source has {len(source_flats)}"
            continue
        correspondence = sorted((source_index[flat.incident], k) for k, flat in enumerate(flats))
        logger.info(
            "section: ACCEPTED | seed=%d attempts=%d d=%d flats=%d",
            seed,
            attempt,
            arrangement.d,
            len(flats),
        )
        return SectionResult(section, correspondence, basis, attempt, seed)

    raise GenericityError(
        f"no generic plane section found (seed {seed}); last rejection: {last_reason}",
        budget,
        failures,
    )
