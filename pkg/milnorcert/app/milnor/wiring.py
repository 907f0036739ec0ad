"""
Braided wiring diagrams.

The d - 1 lines other than L_d are strands, numbered by position 1..d-1 in
the fibre over the current point of the sweep path (increasing real part).
``braids[k]`` is the braid word travelled just before event k (signed
1-based half-twist letters, +i meaning the strand at position i passes below
its right neighbour); ``braids[-1]`` is the word after the last event.  At an
event the lines of the flat occupy the consecutive block
``start .. start + size - 1`` and the block is reversed, which as a braid is
the positive half twist ``garside_word(start, size)``.
"""
from __future__ import annotations

from typing import Iterator, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from .arrangement import Arrangement, rank2_flats
from .free_group import Word


class DiagramEvent(BaseModel):
    flat: list[int]
    start: int = Field(..., ge=1)
    size: int = Field(..., ge=2)
    value: str

    @property
    def block(self) -> range:
        return range(self.start, self.start + self.size)


class BraidedWiringDiagram(BaseModel):
    d: int
    d_index: int
    center: list[str]
    initial_order: list[int]
    events: list[DiagramEvent]
    braids: list[list[int]]
    final_order: list[int]
    basepoint: Literal["left", "right"] = "left"
    method: Literal["sweep", "track"] = "sweep"
    seed: Optional[int] = None

    @property
    def strands(self) -> int:
        return self.d - 1

    def steps(self) -> Iterator[tuple[Word, Optional[DiagramEvent]]]:
        """(braid word before the event, event) pairs, then (trailing word, None)."""
        for k, event in enumerate(self.events):
            yield tuple(self.braids[k]), event
        yield tuple(self.braids[len(self.events)]), None

    def is_real(self) -> bool:
        return not any(self.braids)


def garside_word(start: int, size: int) -> Word:
    """Positive half twist on positions start..start+size-1, length size(size-1)/2."""
    word: list[int] = []
    for top in range(1, size):
        word.extend(start + j - 1 for j in range(top, 0, -1))
    return tuple(word)


def _apply(order: list[int], word: Sequence[int]) -> None:
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < len(order) - 1:
            raise ValueError(f"braid letter {letter} out of range for {len(order)} strands")
        order[i], order[i + 1] = order[i + 1], order[i]


def replay_permutation(diagram: BraidedWiringDiagram) -> list[int]:
    """
    Replay strand positions through every braid letter and block reversal,
    checking each event block holds exactly the lines of its flat.  Returns
    the final order; raises ValueError on any inconsistency.
    """
    if len(diagram.braids) != len(diagram.events) + 1:
        raise ValueError(
            f"diagram has {len(diagram.events)} events but {len(diagram.braids)} braid words"
        )
    expected_lines = sorted(k for k in range(diagram.d) if k != diagram.d_index)
    if sorted(diagram.initial_order) != expected_lines:
        raise ValueError("initial strand order is not a permutation of the lines off L_d")
    order = list(diagram.initial_order)
    for position, (word, event) in enumerate(diagram.steps()):
        _apply(order, word)
        if event is None:
            break
        if event.size != len(event.flat) or event.start + event.size - 1 > len(order):
            raise ValueError(f"event {position} has an invalid block")
        lo = event.start - 1
        block = order[lo : lo + event.size]
        if sorted(block) != sorted(event.flat):
            raise ValueError(
                f"event {position}: block {block} at positions {event.start}..{event.start + event.size - 1} "
                f"does not hold the lines {event.flat}"
            )
        order[lo : lo + event.size] = block[::-1]
    if order != diagram.final_order:
        raise ValueError(f"replayed final order {order} differs from recorded {diagram.final_order}")
    return order


def validate_diagram(diagram: BraidedWiringDiagram, arrangement: Arrangement) -> None:
    """Permutation consistency plus: events are exactly the flats off L_d."""
    if diagram.d != arrangement.d:
        raise ValueError(f"diagram has {diagram.d} lines, arrangement has {arrangement.d}")
    replay_permutation(diagram)
    off = sorted(list(f.incident) for f in rank2_flats(arrangement) if diagram.d_index not in f.incident)
    seen = sorted(e.flat for e in diagram.events)
    if off != seen:
        raise ValueError(f"diagram events cover {len(seen)} flats, expected the {len(off)} flats off L_d")
