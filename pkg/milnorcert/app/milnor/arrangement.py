"""
Stage 2 - reduced hyperplane arrangements and their rank-2 flats.

Responsibility: hold an ordered arrangement of hyperplanes in P^(n-1) with
exact normals in Q(zeta_N), and enumerate the codimension-2 flats with their
multiplicities.  The last hyperplane plays the role of the removed line X_d
unless the arrangement is reordered.

Flat enumeration
----------------
Two hyperplanes i, j meet in the flat annihilated by span(n_i, n_j).  Every
pair inside one flat spans the same 2-dimensional space of normals, so the
reduced row echelon form of [n_i; n_j] is a canonical key: grouping all pairs
by that key gives the complete, saturated list of flats in one pass.
Results are memoised by the arrangement content hash.

Public API
----------
Hyperplane, Arrangement, Flat2
rank2_flats(A)                      -> list[Flat2]
multiplicity_partition(flats, m)    -> (divisible, nondivisible)
is_essential(A)                     -> bool
normal_rank(A, indices)             -> int
flat_census(flats)                  -> {nu: count}
check_pair_identity(A, flats)       -> bool
"""
from __future__ import annotations

import hashlib
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from ..cache import LRUCache
from .cyclo import CycloNum
from .linalg import nullspace, rank, rref

logger = logging.getLogger(__name__)

CANONICAL_HEADER = "# milnorcert arrangement"


def _projective_key(normal: Sequence[CycloNum]) -> tuple[CycloNum, ...]:
    lead = next(c for c in normal if not c.is_zero())
    inv = lead.inverse()
    return tuple(c * inv for c in normal)


@dataclass(frozen=True, slots=True)
class Hyperplane:
    normal: tuple[CycloNum, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal", tuple(self.normal))
        if all(c.is_zero() for c in self.normal):
            raise ValueError(f"hyperplane {self.label or '?'} has a zero normal")
        if any(ch.isspace() for ch in self.label):
            raise ValueError(f"hyperplane label {self.label!r} contains whitespace")


@dataclass(frozen=True)
class Arrangement:
    """Ordered, reduced arrangement of d >= 3 hyperplanes in P^(ambient_dim - 1)."""

    ambient_dim: int
    field_order: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        if self.ambient_dim < 3:
            raise ValueError(f"ambient_dim must be at least 3, got {self.ambient_dim}")
        if self.field_order < 1:
            raise ValueError(f"field_order must be positive, got {self.field_order}")
        if len(self.hyperplanes) < 3:
            raise ValueError(f"an arrangement needs at least 3 hyperplanes, got {len(self.hyperplanes)}")
        seen: dict[tuple[CycloNum, ...], int] = {}
        for index, hyperplane in enumerate(self.hyperplanes):
            if len(hyperplane.normal) != self.ambient_dim:
                raise ValueError(
                    f"hyperplane {index} has {len(hyperplane.normal)} coordinates, "
                    f"expected {self.ambient_dim}"
                )
            for c in hyperplane.normal:
                if c.order != self.field_order:
                    raise ValueError(
                        f"hyperplane {index} has a coefficient of order {c.order}, "
                        f"expected field_order {self.field_order}"
                    )
            key = _projective_key(hyperplane.normal)
            if key in seen:
                raise ValueError(
                    f"hyperplanes {seen[key]} and {index} are proportional "
                    "(the arrangement must be reduced)"
                )
            seen[key] = index

    # -- views -------------------------------------------------------------

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> list[tuple[CycloNum, ...]]:
        return [h.normal for h in self.hyperplanes]

    @property
    def labels(self) -> list[str]:
        return [h.label for h in self.hyperplanes]

    def is_rational(self) -> bool:
        return all(c.is_rational() for h in self.hyperplanes for c in h.normal)

    @cached_property
    def canonical_text(self) -> str:
        lines = [
            CANONICAL_HEADER,
            f"ambient_dim = {self.ambient_dim}",
            f"field_order = {self.field_order}",
        ]
        if all(self.labels):
            lines.append("labels = " + " ".join(self.labels))
        for hyperplane in self.hyperplanes:
            lines.append(", ".join(str(c) for c in hyperplane.normal))
        return "\n".join(lines) + "\n"

    @cached_property
    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_text.encode("utf-8")).hexdigest()

    # -- reordering --------------------------------------------------------

    def reordered(self, permutation: Sequence[int]) -> "Arrangement":
        """New arrangement whose k-th hyperplane is ``self.hyperplanes[permutation[k]]``."""
        if sorted(permutation) != list(range(self.d)):
            raise ValueError(f"not a permutation of range({self.d}): {list(permutation)}")
        return Arrangement(
            self.ambient_dim,
            self.field_order,
            tuple(self.hyperplanes[k] for k in permutation),
        )

    def with_last(self, index: int) -> "Arrangement":
        if not 0 <= index < self.d:
            raise ValueError(f"hyperplane index {index} out of range [0, {self.d})")
        order = [k for k in range(self.d) if k != index] + [index]
        return self.reordered(order)


@dataclass(frozen=True, slots=True)
class Flat2:
    """Codimension-2 flat: the hyperplanes containing it and a basis of the subspace."""

    incident: tuple[int, ...]
    span_basis: tuple[tuple[CycloNum, ...], ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    def __contains__(self, index: object) -> bool:
        return index in self.incident


# ---------------------------------------------------------------------------
# Flat enumeration
# ---------------------------------------------------------------------------

_FLAT_CACHE: LRUCache[str, tuple[Flat2, ...]] = LRUCache(max_size=16)


def _enumerate_flats(arrangement: Arrangement) -> tuple[Flat2, ...]:
    normals = arrangement.normals
    groups: dict[tuple[tuple[CycloNum, ...], ...], set[int]] = {}
    for i, j in itertools.combinations(range(arrangement.d), 2):
        reduced, _ = rref([normals[i], normals[j]])
        key = tuple(tuple(row) for row in reduced)
        groups.setdefault(key, set()).update((i, j))

    flats = []
    for key, members in groups.items():
        basis = nullspace([list(row) for row in key], arrangement.ambient_dim, arrangement.field_order)
        flats.append(Flat2(tuple(sorted(members)), tuple(tuple(v) for v in basis)))
    flats.sort(key=lambda flat: flat.incident)

    logger.info(
        "arrangement: FLATS | d=%d flats=%d census=%s",
        arrangement.d,
        len(flats),
        flat_census(flats),
    )
    return tuple(flats)


def rank2_flats(arrangement: Arrangement) -> list[Flat2]:
    return list(_FLAT_CACHE.get_or_compute(arrangement.content_hash, lambda: _enumerate_flats(arrangement)))


def multiplicity_partition(flats: Iterable[Flat2], m: int) -> tuple[list[Flat2], list[Flat2]]:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    divisible: list[Flat2] = []
    nondivisible: list[Flat2] = []
    for flat in flats:
        (divisible if flat.multiplicity % m == 0 else nondivisible).append(flat)
    return divisible, nondivisible


def normal_rank(arrangement: Arrangement, indices: Optional[Iterable[int]] = None) -> int:
    chosen = range(arrangement.d) if indices is None else indices
    rows = [list(arrangement.hyperplanes[k].normal) for k in chosen]
    return rank(rows) if rows else 0


def is_essential(arrangement: Arrangement) -> bool:
    return normal_rank(arrangement) == arrangement.ambient_dim


def flat_census(flats: Iterable[Flat2]) -> dict[int, int]:
    census: dict[int, int] = {}
    for flat in flats:
        census[flat.multiplicity] = census.get(flat.multiplicity, 0) + 1
    return dict(sorted(census.items()))


def check_pair_identity(arrangement: Arrangement, flats: Sequence[Flat2]) -> bool:
    """Each pair of hyperplanes lies in exactly one flat: sum C(nu, 2) = C(d, 2)."""
    covered = sum(f.multiplicity * (f.multiplicity - 1) // 2 for f in flats)
    return covered == arrangement.d * (arrangement.d - 1) // 2
