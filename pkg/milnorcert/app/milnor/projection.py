"""
Stage 3 - projection of a line arrangement from a point of L_d.

Responsibility: put the arrangement into the exact affine chart in which L_d
is the line at infinity and the pencil through the centre P is vertical.

Chart
-----
Pick v1 on L_d independent of P and v3 off L_d; a point X v1 + Y P + Z v3
has affine coordinates x = X / Z, y = Y / Z.  Line i with normal n_i becomes

    y = s_i x + t_i,    s_i = -(n_i . v1) / (n_i . P),  t_i = -(n_i . v3) / (n_i . P)

(n_i . P != 0 because P lies on no other line).  The pencil through P is
{x = const}, so projecting from P is (x, y) -> x, and the singular point of a
flat {i, j, ...} off L_d projects to (t_j - t_i) / (s_i - s_j).

Public API
----------
PencilChart
pencil_chart(A, d_index, P)             -> PencilChart
projection_genericity(A, d_index, P)    -> bool
random_point_on(A, d_index, seed, ...)  -> (P, attempts)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..settings import max_retries
from .arrangement import Arrangement, Flat2, rank2_flats
from .cyclo import CycloNum
from .errors import GenericityError
from .linalg import cross, dot, rank

logger = logging.getLogger(__name__)

Point = tuple[CycloNum, ...]


@dataclass(frozen=True)
class PencilChart:
    d_index: int
    center: Point
    slopes: dict[int, CycloNum]
    intercepts: dict[int, CycloNum]

    @property
    def lines(self) -> list[int]:
        return sorted(self.slopes)

    def value_of(self, flat: Flat2) -> CycloNum:
        """Pencil parameter of the singular point of a flat not on L_d."""
        if self.d_index in flat.incident:
            raise ValueError(f"flat {flat.incident} lies on L_d")
        i, j = flat.incident[:2]
        return (self.intercepts[j] - self.intercepts[i]) / (self.slopes[i] - self.slopes[j])

    def events(self, flats: Sequence[Flat2]) -> list[tuple[Flat2, CycloNum]]:
        return [(flat, self.value_of(flat)) for flat in flats if self.d_index not in flat.incident]


def _validate_center(arrangement: Arrangement, d_index: int, center: Sequence[CycloNum]) -> Point:
    if arrangement.ambient_dim != 3:
        raise ValueError(f"projection needs a line arrangement (ambient_dim 3), got {arrangement.ambient_dim}")
    if not 0 <= d_index < arrangement.d:
        raise ValueError(f"d_index {d_index} out of range [0, {arrangement.d})")
    point = tuple(center)
    if len(point) != 3 or all(c.is_zero() for c in point):
        raise ValueError(f"projection centre must be a nonzero point of P^2, got {point}")
    if not dot(arrangement.hyperplanes[d_index].normal, point).is_zero():
        raise ValueError(f"projection centre does not lie on L_d (line {d_index})")
    for k, hyperplane in enumerate(arrangement.hyperplanes):
        if k != d_index and dot(hyperplane.normal, point).is_zero():
            raise ValueError(f"projection centre also lies on line {k}")
    return point


def pencil_chart(arrangement: Arrangement, d_index: int, center: Sequence[CycloNum]) -> PencilChart:
    point = _validate_center(arrangement, d_index, center)
    order = arrangement.field_order
    n_d = arrangement.hyperplanes[d_index].normal
    basis = [
        tuple(CycloNum.one(order) if r == c else CycloNum.zero(order) for c in range(3))
        for r in range(3)
    ]
    v1 = next(
        candidate
        for candidate in (cross(n_d, e) for e in basis)
        if any(not c.is_zero() for c in candidate) and rank([list(candidate), list(point)]) == 2
    )
    v3 = next(e for e in basis if not dot(n_d, e).is_zero())

    slopes: dict[int, CycloNum] = {}
    intercepts: dict[int, CycloNum] = {}
    for k, hyperplane in enumerate(arrangement.hyperplanes):
        if k == d_index:
            continue
        b = dot(hyperplane.normal, point)
        slopes[k] = -dot(hyperplane.normal, v1) / b
        intercepts[k] = -dot(hyperplane.normal, v3) / b
    return PencilChart(d_index, point, slopes, intercepts)


def projection_genericity(
    arrangement: Arrangement,
    d_index: int,
    center: Sequence[CycloNum],
    flats: Optional[Sequence[Flat2]] = None,
) -> bool:
    """True iff the singular points off L_d have pairwise distinct images."""
    chart = pencil_chart(arrangement, d_index, center)
    values = [value for _, value in chart.events(flats if flats is not None else rank2_flats(arrangement))]
    return len(set(values)) == len(values)


def random_point_on(
    arrangement: Arrangement,
    d_index: int,
    seed: int,
    retries: Optional[int] = None,
) -> tuple[Point, int]:
    """Seeded search for a generic projection centre P = n_d x r with r an integer vector."""
    if arrangement.ambient_dim != 3:
        raise ValueError(f"projection needs a line arrangement (ambient_dim 3), got {arrangement.ambient_dim}")
    if not 0 <= d_index < arrangement.d:
        raise ValueError(f"d_index {d_index} out of range [0, {arrangement.d})")
    budget = retries if retries is not None else max_retries()
    rng = np.random.default_rng(seed)
    order = arrangement.field_order
    n_d = arrangement.hyperplanes[d_index].normal
    flats = rank2_flats(arrangement)
    rejected = {"degenerate": 0, "on_line": 0, "collision": 0}
    for attempt in range(1, budget + 1):
        height = 3 + 2 * attempt
        r = [CycloNum.rational(order, int(v)) for v in rng.integers(-height, height + 1, size=3)]
        point = tuple(cross(n_d, r))
        if all(c.is_zero() for c in point):
            rejected["degenerate"] += 1
            continue
        try:
            generic = projection_genericity(arrangement, d_index, point, flats)
        except ValueError:
            rejected["on_line"] += 1
            continue
        if generic:
            logger.info(
                "projection: CENTRE | seed=%d attempts=%d d_index=%d", seed, attempt, d_index
            )
            return point, attempt
        rejected["collision"] += 1
    raise GenericityError(
        f"no generic projection centre on line {d_index} (seed {seed})", budget, rejected
    )
