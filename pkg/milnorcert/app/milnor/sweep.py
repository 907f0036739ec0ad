"""
Exact real sweep of a rational line arrangement.

In the pencil chart every line off L_d is y = s x + t with rational s, t.
Sweeping x from left to right, the strands keep their real y-order between
singular values, so every braid word is empty and the diagram is just the
sequence of block reversals.  ``side="right"`` sweeps from the right by
mirroring x -> -x (s -> -s).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Literal, Sequence

from .arrangement import Arrangement, rank2_flats
from .cyclo import CycloNum
from .projection import pencil_chart
from .wiring import BraidedWiringDiagram, DiagramEvent

logger = logging.getLogger(__name__)


def sweep_real(
    arrangement: Arrangement,
    d_index: int,
    center: Sequence[CycloNum],
    side: Literal["left", "right"] = "left",
) -> BraidedWiringDiagram:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not arrangement.is_rational() or not all(c.is_rational() for c in center):
        raise ValueError("sweep_real needs rational coefficients and a rational projection centre")
    chart = pencil_chart(arrangement, d_index, center)
    sign = 1 if side == "left" else -1
    slopes = {k: sign * v.to_rational() for k, v in chart.slopes.items()}
    intercepts = {k: v.to_rational() for k, v in chart.intercepts.items()}

    events = [(sign * value.to_rational(), value, flat) for flat, value in chart.events(rank2_flats(arrangement))]
    events.sort(key=lambda item: item[0])
    for (a, _, f), (b, _, g) in zip(events, events[1:]):
        if a == b:
            raise ValueError(
                f"projection centre is not generic: flats {f.incident} and {g.incident} project to the same value"
            )

    lines = chart.lines
    order = sorted(lines, key=lambda k: (-slopes[k], intercepts[k]))
    initial = list(order)
    diagram_events: list[DiagramEvent] = []
    for x, value, flat in events:
        expected = sorted(lines, key=lambda k: (slopes[k] * x + intercepts[k], -slopes[k]))
        if expected != order:
            raise ValueError(f"strand order before the event at {value} is inconsistent with the sweep")
        positions = sorted(order.index(k) for k in flat.incident)
        if positions[-1] - positions[0] != len(positions) - 1:
            raise ValueError(f"flat {flat.incident} is not a consecutive block at {value}")
        lo, hi = positions[0], positions[-1] + 1
        order[lo:hi] = order[lo:hi][::-1]
        diagram_events.append(
            DiagramEvent(flat=list(flat.incident), start=lo + 1, size=len(positions), value=str(value))
        )

    final = sorted(lines, key=lambda k: (slopes[k], intercepts[k]))
    if order != final:
        raise ValueError("strand order after the last event does not match the slope order")

    logger.info(
        "sweep: DONE | d=%d d_index=%d events=%d side=%s", arrangement.d, d_index, len(diagram_events), side
    )
    return BraidedWiringDiagram(
        d=arrangement.d,
        d_index=d_index,
        center=[str(c) for c in chart.center],
        initial_order=initial,
        events=diagram_events,
        braids=[[] for _ in range(len(diagram_events) + 1)],
        final_order=order,
        basepoint=side,
        method="sweep",
    )
