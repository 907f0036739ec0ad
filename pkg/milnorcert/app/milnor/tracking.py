"""
Numerical braid monodromy for line arrangements with complex coefficients.

The fibre over x of the pencil through P is the set of points y_j = s_j x + t_j,
one per line off L_d, so tracking is explicit: only the path needs care.
After a random rotation x -> eta x, y -> omega y (for generic real parts) the
singular values are sorted by (Re, Im).  The path starts left of the first one
and enters the disc of radius r around every singular value v at v - r, leaves
it at v + r along the lower half circle, and goes straight on to the next disc.
The local strands y_j - y(v) = s_j (x - v) turn through exactly pi on the half
circle, so the block of lines through the singular point is reversed; the
radius keeps that block consecutive in real-part order and the discs apart.

Along the path the strands are kept in real-part order and every exchange of
neighbours is recorded as a half-twist letter (+i when the left point passes
below).  Straight pieces are exact under linear interpolation; arcs are
sampled, and the sample count is doubled until two consecutive refinements
give the same diagram.  The word recorded after event k is the arc word with
the block's positive half twist divided out, so a real arrangement tracked
without rotation gives trivial words, like ``sweep_real``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..settings import max_refinements
from .arrangement import Arrangement, rank2_flats
from .cyclo import CycloNum
from .errors import StabilizationError
from .free_group import Word, inverse, is_trivial_braid, reduce
from .projection import pencil_chart
from .wiring import BraidedWiringDiagram, DiagramEvent, garside_word, validate_diagram

logger = logging.getLogger(__name__)

_TIE = 1e-9


class _Unresolved(Exception):
    """The current sampling cannot resolve the strand exchanges."""


@dataclass(frozen=True)
class _Trace:
    initial_order: tuple[int, ...]
    starts: tuple[int, ...]
    braids: tuple[Word, ...]
    final_order: tuple[int, ...]


def _advance(order: list[int], y0: np.ndarray, y1: np.ndarray) -> list[int]:
    """Update ``order`` (strand ids by position) across one straight step; return the letters."""
    re0, re1 = y0.real, y1.real
    flips: list[tuple[float, int, int]] = []
    for p in range(len(order)):
        a = order[p]
        for q in range(p + 1, len(order)):
            b = order[q]
            before, after = re0[a] - re0[b], re1[a] - re1[b]
            if before * after < 0:
                flips.append((before / (before - after), a, b))
    if not flips:
        return []
    flips.sort()

    letters: list[int] = []
    k = 0
    while k < len(flips):
        tau = flips[k][0]
        cluster = [f for f in flips[k:] if f[0] - tau <= _TIE]
        k += len(cluster)
        strands = {s for _, a, b in cluster for s in (a, b)}
        positions = sorted(order.index(s) for s in strands)
        lo, hi = positions[0], positions[-1]
        size = hi - lo + 1
        if size != len(positions) or len(cluster) != size * (size - 1) // 2:
            raise _Unresolved(f"{len(cluster)} simultaneous exchanges do not form one block")
        y = y0 + tau * (y1 - y0)
        left, right = order[lo], order[hi]
        word = garside_word(lo + 1, size)
        letters.extend(word if y[left].imag < y[right].imag else inverse(word))
        order[lo : hi + 1] = order[lo : hi + 1][::-1]

    if [int(s) for s in np.argsort(re1, kind="stable")] != order:
        raise _Unresolved("strand order after the step does not match the real-part order")
    return letters


def _trace(
    slopes: np.ndarray,
    intercepts: np.ndarray,
    values: np.ndarray,
    blocks: Sequence[Sequence[int]],
    samples: int,
) -> _Trace:
    def fiber(x: complex) -> np.ndarray:
        return slopes * x + intercepts

    n = len(slopes)
    count = len(values)
    smax = float(np.max(np.abs(slopes))) + 1e-12

    if count:
        distances = [abs(values[i] - values[j]) for i in range(count) for j in range(i + 1, count)]
        gaps = [values[i + 1].real - values[i].real for i in range(count - 1)]
        eps_global = 0.25 * min(distances + gaps + [4.0])
    radii = []
    for k in range(count):
        y = fiber(values[k])
        y0 = y[blocks[k][0]]
        others = [abs(y[j].real - y0.real) for j in range(n) if j not in blocks[k]]
        radii.append(min(eps_global, min(others) / (4 * smax)) if others else eps_global)

    point = (values[0] - 2 * radii[0]) if count else 0j
    order = [int(s) for s in np.argsort(fiber(point).real, kind="stable")]
    initial = tuple(order)
    pending: list[int] = []
    braids: list[Word] = []
    starts: list[int] = []

    for k in range(count):
        arc_start = values[k] - radii[k]
        pending.extend(_advance(order, fiber(point), fiber(arc_start)))
        braids.append(() if is_trivial_braid(reduce(pending), n) else reduce(pending))

        positions = sorted(order.index(j) for j in blocks[k])
        lo, hi = positions[0], positions[-1]
        if hi - lo + 1 != len(positions):
            raise _Unresolved(f"event {k}: block is not consecutive at the arc start")
        starts.append(lo + 1)
        block_before = order[lo : hi + 1]

        # lower half circle, counter-clockwise from v - r to v + r
        theta0, theta1 = np.pi, 2 * np.pi
        # odd step count: the symmetric arc never samples its midpoint
        steps = samples + 1
        xs = values[k] + radii[k] * np.exp(1j * np.linspace(theta0, theta1, steps + 1))
        ys = np.outer(xs, slopes) + intercepts
        arc: list[int] = []
        for a in range(steps):
            arc.extend(_advance(order, ys[a], ys[a + 1]))
        if order[lo : hi + 1] != block_before[::-1]:
            raise _Unresolved(f"event {k}: the arc does not reverse the block")
        pending = list(inverse(garside_word(lo + 1, hi - lo + 1))) + arc
        point = values[k] + radii[k]

    braids.append(() if is_trivial_braid(reduce(pending), n) else reduce(pending))
    return _Trace(initial, tuple(starts), tuple(braids), tuple(order))


def track_complex(
    arrangement: Arrangement,
    d_index: int,
    center: Sequence[CycloNum],
    seed: int = 0,
    rotate: bool = True,
    initial_samples: int = 16,
    refinements: Optional[int] = None,
) -> BraidedWiringDiagram:
    chart = pencil_chart(arrangement, d_index, center)
    lines = chart.lines
    strand = {line: k for k, line in enumerate(lines)}

    rng = np.random.default_rng(seed)
    if rotate:
        omega, eta = np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
    else:
        omega = eta = 1 + 0j
    slopes = np.array([omega * chart.slopes[k].to_complex() / eta for k in lines])
    intercepts = np.array([omega * chart.intercepts[k].to_complex() for k in lines])

    events = [(eta * value.to_complex(), value, flat) for flat, value in chart.events(rank2_flats(arrangement))]
    events.sort(key=lambda item: (item[0].real, item[0].imag))
    values = np.array([item[0] for item in events], dtype=complex)
    blocks = [[strand[j] for j in flat.incident] for _, _, flat in events]

    budget = refinements if refinements is not None else max_refinements()
    samples = max(2, initial_samples)
    previous: Optional[_Trace] = None
    for attempt in range(1, budget + 1):
        try:
            current: Optional[_Trace] = _trace(slopes, intercepts, values, blocks, samples)
        except _Unresolved as exc:
            logger.debug("tracking: UNRESOLVED | samples=%d reason=%s", samples, exc)
            current = None
        if current is not None and current == previous:
            break
        previous = current
        samples *= 2
    else:
        raise StabilizationError(
            f"braid monodromy did not stabilise after {budget} refinements "
            f"(seed {seed}); try another projection centre",
            budget,
        )

    diagram = BraidedWiringDiagram(
        d=arrangement.d,
        d_index=d_index,
        center=[str(c) for c in chart.center],
        initial_order=[lines[s] for s in current.initial_order],
        events=[
            DiagramEvent(flat=list(flat.incident), start=start, size=flat.multiplicity, value=str(value))
            for (_, value, flat), start in zip(events, current.starts)
        ],
        braids=[list(word) for word in current.braids],
        final_order=[lines[s] for s in current.final_order],
        basepoint="left",
        method="track",
        seed=seed,
    )
    validate_diagram(diagram, arrangement)
    logger.info(
        "tracking: STABLE | seed=%d samples=%d refinements=%d events=%d nontrivial_words=%d",
        seed,
        samples,
        attempt,
        len(diagram.events),
        sum(1 for word in diagram.braids if word),
    )
    return diagram
