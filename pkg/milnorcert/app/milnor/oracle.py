"""
Stage 6 - independent dimension count through a group presentation.

A braided wiring diagram gives a Zariski-van Kampen presentation of the
fundamental group of the complement: one meridian per line off L_d, and at
every event the meridians of the block are made to commute cyclically
(q - 1 relators equating consecutive cyclic conjugates of their product).
The rank-1 local system sending every meridian to t is then read off the
twisted cochain complex C^0 -> C^1 -> C^2 of the presentation complex, with
d^1 the Fox Jacobian evaluated at t:

    dim H^1 = n - rank J(t) - (1 if t != 1 else 0)

All ranks are exact over Q(zeta_m).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional

from .arrangement import Arrangement, rank2_flats
from .cyclo import CycloNum, zeta
from .free_group import Word, cyclic_reduce, format_word, inverse, multiply, transport
from .linalg import fraction_free_rank
from .wiring import BraidedWiringDiagram, garside_word, replay_permutation

logger = logging.getLogger(__name__)

PRESENTATION_HEADER = "# milnorcert presentation"


def _canonical(relator: Word) -> Word:
    """Representative of a relator up to cyclic permutation and inversion."""
    candidates = []
    for word in (relator, inverse(relator)):
        candidates.extend(word[k:] + word[:k] for k in range(len(word)))
    return min(candidates) if candidates else ()


@dataclass(frozen=True)
class Presentation:
    generators: int
    relators: tuple[Word, ...]
    d: int
    event_sizes: tuple[int, ...] = ()
    labels: tuple[int, ...] = field(default=())

    @property
    def raw_relator_count(self) -> int:
        return sum(q - 1 for q in self.event_sizes)

    def simplify(self) -> "Presentation":
        """Cyclic reduction; drops empty relators and repeats up to cyclic permutation and inversion."""
        seen: set[Word] = set()
        kept: list[Word] = []
        for relator in self.relators:
            reduced = cyclic_reduce(relator)
            key = _canonical(reduced)
            if not reduced or key in seen:
                continue
            seen.add(key)
            kept.append(reduced)
        return replace(self, relators=tuple(kept))

    def abelianized_rank(self) -> int:
        """Rank of the abelianisation: generators minus the rank of the exponent-sum matrix."""
        rows = []
        for relator in self.relators:
            sums = [0] * self.generators
            for letter in relator:
                sums[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append([CycloNum.rational(1, v) for v in sums])
        return self.generators - (fraction_free_rank(rows) if rows else 0)

    def dump(self) -> str:
        lines = [
            PRESENTATION_HEADER,
            f"generators = {' '.join(f'x{k}' for k in range(1, self.generators + 1))}",
        ]
        if self.labels:
            lines.append("# line of each generator: " + " ".join(str(k) for k in self.labels))
        lines.append(f"relators = {len(self.relators)}")
        lines.extend(format_word(r) for r in self.relators)
        return "\n".join(lines) + "\n"


def presentation_from_diagram(diagram: BraidedWiringDiagram) -> Presentation:
    replay_permutation(diagram)
    n = diagram.strands
    images: list[Word] = [(k,) for k in range(1, n + 1)]
    relators: list[Word] = []
    sizes: list[int] = []
    for word, event in diagram.steps():
        for letter in word:
            images = transport(images, letter)
        if event is None:
            break
        block = images[event.start - 1 : event.start - 1 + event.size]
        shifts = [multiply(*(block[j:] + block[:j])) for j in range(event.size)]
        relators.extend(multiply(shifts[j], inverse(shifts[j + 1])) for j in range(event.size - 1))
        sizes.append(event.size)
        for letter in garside_word(event.start, event.size):
            images = transport(images, letter)

    pres = Presentation(n, tuple(relators), diagram.d, tuple(sizes), tuple(diagram.initial_order))
    if pres.abelianized_rank() != n:
        raise ValueError(f"presentation abelianises to rank {pres.abelianized_rank()}, expected {n}")
    logger.info(
        "oracle: PRESENTATION | generators=%d relators=%d method=%s", n, len(relators), diagram.method
    )
    return pres


def local_system_parameter(d: int, m: int, k: int) -> CycloNum:
    """
    The value t = exp(2 pi i k / d) by which every meridian acts, as an
    element of Q(zeta_m); needs m | d and (d / m) | k.
    """
    if m < 1 or d % m:
        raise ValueError(f"m = {m} must be a positive divisor of d = {d}")
    if (k * m) % d:
        raise ValueError(f"lambda of index {k} does not lie in Q(zeta_{m}) for d = {d}")
    return zeta(m, (k * m // d) % m)


def fox_jacobian(pres: Presentation, t: CycloNum) -> list[list[CycloNum]]:
    zero = CycloNum.zero(t.order)
    powers: dict[int, CycloNum] = {}

    def power(e: int) -> CycloNum:
        if e not in powers:
            powers[e] = t**e
        return powers[e]

    rows = []
    for relator in pres.relators:
        coeffs: list[dict[int, int]] = [{} for _ in range(pres.generators)]
        e = 0
        for letter in relator:
            j = abs(letter) - 1
            if letter > 0:
                coeffs[j][e] = coeffs[j].get(e, 0) + 1
                e += 1
            else:
                coeffs[j][e - 1] = coeffs[j].get(e - 1, 0) - 1
                e -= 1
        rows.append([sum((c * power(p) for p, c in col.items() if c), zero) for col in coeffs])
    return rows


def fox_h1(pres: Presentation, m: int, k: int) -> int:
    """dim H^1 of the complement with meridians acting by exp(2 pi i k / d)."""
    t = local_system_parameter(pres.d, m, k)
    jacobian = fox_jacobian(pres, t)
    rank_j = fraction_free_rank(jacobian) if jacobian else 0
    value = pres.generators - rank_j - (0 if t == 1 else 1)
    logger.info("oracle: FOX | m=%d k=%d relators=%d rank=%d h1=%d", m, k, len(pres.relators), rank_j, value)
    return value


@dataclass(frozen=True)
class EulerCheck:
    passed: bool
    twisted: int
    combinatorial: int


def euler_consistency(
    pres: Presentation, m: int, k: int, arrangement: Optional[Arrangement] = None
) -> EulerCheck:
    """
    Twisted alternating sum h0 - h1 + h2 of the presentation complex against
    chi(U) = 3 - 2d + sum over flats of (nu - 1).  Uses the census of
    ``arrangement`` when given; otherwise the event sizes plus the d - 1
    lines meeting L_d.  Meaningful for the unsimplified presentation.
    """
    t = local_system_parameter(pres.d, m, k)
    jacobian = fox_jacobian(pres, t)
    rank_j = fraction_free_rank(jacobian) if jacobian else 0
    d0 = 0 if t == 1 else 1
    h0 = 1 - d0
    h1 = pres.generators - rank_j - d0
    h2 = len(pres.relators) - rank_j
    twisted = h0 - h1 + h2

    d = pres.d
    if arrangement is not None:
        flat_sum = sum(f.multiplicity - 1 for f in rank2_flats(arrangement))
    else:
        flat_sum = sum(q - 1 for q in pres.event_sizes) + (d - 1)
    combinatorial = 3 - 2 * d + flat_sum
    return EulerCheck(twisted == combinatorial, twisted, combinatorial)
