"""
Generators for the example families.  Every generator recomputes the flat
census of what it built and compares it with the census the construction is
meant to have; parameterised families redraw seeded parameters when the
check fails.

Families
--------
hessian(b) / hessian(a=...)   xyz * prod (zeta^i x + zeta^j y + z) over Q(zeta_b); a gives b = 4a - 1
two_line_joins(m, a, seed)    lines joining a(m-1) points of L1 with a(m-1) points of L2, then L1, L2
perturbed_grid(...)           y = (a_i - b_j + kc) x + (a_i + b_j) z, x = lz (l = -1, 0, 1), z = 0
perturbed_grid_shifted(...)   as above with k'c' added to the z coefficient (d = 112)
generic(d, seed)              d lines in general position
random_real(d, seed)          small-height integer lines, reduced and essential
braid(ambient_dim, essential) x_i - x_j, optionally with the coordinate hyperplanes
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

import numpy as np

from ..settings import max_retries
from .arrangement import Arrangement, Flat2, Hyperplane, flat_census, is_essential, rank2_flats
from .cyclo import CycloNum, zeta
from .errors import GenericityError

logger = logging.getLogger(__name__)


class Family(str, Enum):
    hessian = "hessian"
    two_line_joins = "two_line_joins"
    perturbed_grid = "perturbed_grid"
    perturbed_grid_shifted = "perturbed_grid_shifted"
    generic = "generic"
    random_real = "random_real"
    braid = "braid"


def _rational_line(order: int, *coeffs: Any, label: str) -> Hyperplane:
    return Hyperplane(tuple(CycloNum.rational(order, Fraction(c)) for c in coeffs), label)


def _high_flats_ok(flats: Sequence[Flat2], nu: int, count: int) -> bool:
    census = flat_census(flats)
    return set(census) <= {2, nu} and census.get(nu, 0) == count


# ---------------------------------------------------------------------------
# Hessian and generalized Hessian
# ---------------------------------------------------------------------------

def hessian(b: Optional[int] = None, a: Optional[int] = None) -> Arrangement:
    if (b is None) == (a is None):
        raise ValueError("pass exactly one of b or a")
    if a is not None:
        if a < 1:
            raise ValueError(f"a must be positive, got {a}")
        b = 4 * a - 1
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    one, zero = CycloNum.one(b), CycloNum.zero(b)
    lines = [
        Hyperplane((one, zero, zero), "x"),
        Hyperplane((zero, one, zero), "y"),
        Hyperplane((zero, zero, one), "z"),
    ]
    for i, j in itertools.product(range(b), repeat=2):
        lines.append(Hyperplane((zeta(b, i), zeta(b, j), one), f"H{i}.{j}"))
    arrangement = Arrangement(3, b, tuple(lines))

    flats = rank2_flats(arrangement)
    high = [f for f in flats if f.multiplicity == b + 1]
    on_axes = all(any(k in f.incident for k in (0, 1, 2)) for f in high)
    if not (_high_flats_ok(flats, b + 1, 3 * b) and on_axes):
        raise RuntimeError(f"hessian({b}) census mismatch: {flat_census(flats)}")
    logger.info("families: HESSIAN | b=%d d=%d", b, arrangement.d)
    return arrangement


# ---------------------------------------------------------------------------
# Seeded parameter search
# ---------------------------------------------------------------------------

def _search(
    name: str,
    seed: int,
    build: Callable[[np.random.Generator, int], Optional[Arrangement]],
    retries: Optional[int],
) -> Arrangement:
    budget = retries if retries is not None else max_retries()
    rng = np.random.default_rng(seed)
    for attempt in range(1, budget + 1):
        try:
            arrangement = build(rng, attempt)
        except ValueError:
            arrangement = None
        if arrangement is not None:
            logger.info("families: %s | seed=%d attempts=%d d=%d", name.upper(), seed, attempt, arrangement.d)
            return arrangement
    raise GenericityError(f"{name}: no parameters with the intended flat census (seed {seed})", budget)


def _distinct_nonzero(rng: np.random.Generator, count: int, height: int) -> list[int]:
    pool = [v for v in range(-height, height + 1) if v]
    if len(pool) < count:
        raise ValueError(f"height {height} too small for {count} distinct values")
    return [int(v) for v in rng.choice(pool, size=count, replace=False)]


def two_line_joins(m: int, a: int, seed: int = 0, retries: Optional[int] = None) -> Arrangement:
    """
    Points P_{i,j} on L1 = {x = 0}, Q_{i,j'} on L2 = {y = 0}; the line J{i}.{j}.{j'}
    joins P_{i,j} and Q_{i,j'}.  Multiple points are exactly the P's and Q's,
    each of multiplicity m; L2 comes last.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    count = a * (m - 1)

    def build(rng: np.random.Generator, attempt: int) -> Optional[Arrangement]:
        height = 4 * count + 3 * attempt
        ps = _distinct_nonzero(rng, count, height)
        qs = _distinct_nonzero(rng, count, height)
        lines = []
        for i, j, jp in itertools.product(range(a), range(m - 1), range(m - 1)):
            p, q = ps[i * (m - 1) + j], qs[i * (m - 1) + jp]
            lines.append(_rational_line(1, p, q, -p * q, label=f"J{i + 1}.{j + 1}.{jp + 1}"))
        lines.append(_rational_line(1, 1, 0, 0, label="L1"))
        lines.append(_rational_line(1, 0, 1, 0, label="L2"))
        arrangement = Arrangement(3, 1, tuple(lines))
        flats = rank2_flats(arrangement)
        l1, l2 = arrangement.d - 2, arrangement.d - 1
        high = [f for f in flats if f.multiplicity == m]
        if not _high_flats_ok(flats, m, 2 * count):
            return None
        if not all((l1 in f.incident) != (l2 in f.incident) for f in high):
            return None
        return arrangement

    return _search("two_line_joins", seed, build, retries)


# ---------------------------------------------------------------------------
# Perturbed grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridParams:
    a: tuple[Fraction, ...] = field(default_factory=lambda: tuple(Fraction(v) for v in (3, 11, 29, 71)))
    b: tuple[Fraction, ...] = field(default_factory=lambda: tuple(Fraction(v) for v in (130, 257, 511, 1031)))
    c: Fraction = Fraction(1, 7)
    c_shift: Fraction = Fraction(10007)

    def __post_init__(self) -> None:
        if len(self.a) != 4 or len(self.b) != 4:
            raise ValueError("grid parameters need four values a_i and four values b_i")
        if self.c <= 0:
            raise ValueError(f"c must be positive, got {self.c}")


def _random_grid_params(rng: np.random.Generator, attempt: int) -> GridParams:
    height = 50 * attempt
    values = _distinct_nonzero(rng, 8, height)
    return GridParams(
        a=tuple(Fraction(v) for v in values[:4]),
        b=tuple(Fraction(v) for v in values[4:]),
        c=Fraction(1, int(rng.integers(5, 20))),
        c_shift=Fraction(int(rng.integers(40 * height, 80 * height))),
    )


def _grid_lines(params: GridParams, shifted: bool) -> list[Hyperplane]:
    lines = []
    shifts = (-1, 0, 1) if shifted else (None,)
    for i, j in itertools.product(range(4), repeat=2):
        if i == j:
            continue
        for k in (-1, 0, 1):
            slope = params.a[i] - params.b[j] + k * params.c
            for kp in shifts:
                intercept = params.a[i] + params.b[j] + (kp * params.c_shift if kp is not None else 0)
                label = f"G{i + 1}.{j + 1}.{k}" + (f".{kp}" if kp is not None else "")
                # y = slope x + intercept z
                lines.append(_rational_line(1, slope, -1, intercept, label=label))
    for level in (-1, 0, 1):
        lines.append(_rational_line(1, 1, 0, -level, label=f"V{level}"))
    lines.append(_rational_line(1, 0, 0, 1, label="Linf"))
    return lines


def _grid(name: str, params: Optional[GridParams], seed: int, shifted: bool, retries: Optional[int]) -> Arrangement:
    quadruple = 145 if shifted else 37

    def accept(candidate: GridParams) -> Optional[Arrangement]:
        arrangement = Arrangement(3, 1, tuple(_grid_lines(candidate, shifted)))
        flats = rank2_flats(arrangement)
        d = arrangement.d
        vertex = (d - 4, d - 3, d - 2, d - 1)
        if not _high_flats_ok(flats, 4, quadruple):
            return None
        if not any(f.incident == vertex for f in flats):
            return None
        return arrangement

    def build(rng: np.random.Generator, attempt: int) -> Optional[Arrangement]:
        if attempt == 1:
            return accept(params or GridParams())
        if params is not None:
            raise GenericityError(f"{name}: the given parameters do not produce the intended census", 1)
        return accept(_random_grid_params(rng, attempt))

    return _search(name, seed, build, retries)


def perturbed_grid(params: Optional[GridParams] = None, seed: int = 0, retries: Optional[int] = None) -> Arrangement:
    return _grid("perturbed_grid", params, seed, shifted=False, retries=retries)


def perturbed_grid_shifted(
    params: Optional[GridParams] = None, seed: int = 0, retries: Optional[int] = None
) -> Arrangement:
    return _grid("perturbed_grid_shifted", params, seed, shifted=True, retries=retries)


# ---------------------------------------------------------------------------
# Random and classical arrangements
# ---------------------------------------------------------------------------

def generic(d: int, seed: int = 0, retries: Optional[int] = None) -> Arrangement:
    if d < 3:
        raise ValueError(f"d must be at least 3, got {d}")

    def build(rng: np.random.Generator, attempt: int) -> Optional[Arrangement]:
        height = 2 * d + attempt
        rows = rng.integers(-height, height + 1, size=(d, 3))
        arrangement = Arrangement(
            3, 1, tuple(_rational_line(1, *map(int, row), label=f"H{k}") for k, row in enumerate(rows))
        )
        flats = rank2_flats(arrangement)
        return arrangement if all(f.multiplicity == 2 for f in flats) else None

    return _search("generic", seed, build, retries)


def random_real(d: int, seed: int = 0, retries: Optional[int] = None) -> Arrangement:
    if d < 3:
        raise ValueError(f"d must be at least 3, got {d}")

    def build(rng: np.random.Generator, attempt: int) -> Optional[Arrangement]:
        rows = rng.integers(-2, 3, size=(d, 3))
        arrangement = Arrangement(
            3, 1, tuple(_rational_line(1, *map(int, row), label=f"H{k}") for k, row in enumerate(rows))
        )
        return arrangement if is_essential(arrangement) else None

    return _search("random_real", seed, build, retries if retries is not None else 200)


def braid(ambient_dim: int = 3, essential: bool = True) -> Arrangement:
    """Reflection arrangement x_i - x_j; ``essential`` adds the coordinate hyperplanes x_i."""
    if ambient_dim < 3:
        raise ValueError(f"ambient_dim must be at least 3, got {ambient_dim}")

    def unit(k: int) -> list[int]:
        return [1 if c == k else 0 for c in range(ambient_dim)]

    lines = []
    if essential:
        lines += [_rational_line(1, *unit(k), label=f"x{k}") for k in range(ambient_dim)]
    for i, j in itertools.combinations(range(ambient_dim), 2):
        normal = [u - v for u, v in zip(unit(i), unit(j))]
        lines.append(_rational_line(1, *normal, label=f"x{i}-x{j}"))
    return Arrangement(ambient_dim, 1, tuple(lines))


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def generate(family: Family | str, params: Optional[dict[str, Any]] = None, seed: int = 0) -> Arrangement:
    family = Family(family)
    params = dict(params or {})
    if family is Family.hessian:
        return hessian(b=params.get("b"), a=params.get("a"))
    if family is Family.two_line_joins:
        return two_line_joins(int(params.get("m", 3)), int(params.get("a", 1)), seed=seed)
    if family in (Family.perturbed_grid, Family.perturbed_grid_shifted):
        grid = GridParams(**params) if params else None
        if family is Family.perturbed_grid:
            return perturbed_grid(grid, seed=seed)
        return perturbed_grid_shifted(grid, seed=seed)
    if family is Family.generic:
        return generic(int(params["d"]), seed=seed)
    if family is Family.random_real:
        return random_real(int(params["d"]), seed=seed)
    return braid(int(params.get("ambient_dim", 3)), bool(params.get("essential", True)))
