"""
Stage 5 - the lambda-eigenspace of H^1 of the Milnor fiber of a line
arrangement as the joint invariant subspace of its monodromy representation.

Responsibility: turn a braided wiring diagram into exact matrices over
Q(zeta_m) acting on the sigma-cycle coordinates e_1..e_n (n = d - 1), and
measure the common fixed space on the quotient by the all-ones vector.

Conventions
-----------
Matrices act on coordinate columns and every matrix fixes the all-ones
vector (row sums are 1).  For an event whose block is the coordinates
i0..i0+q-1, the local monodromy is

    M[r][c] = t^q delta_rc + (1 - t) t^(c - i0)      (r, c in the block)

and the identity elsewhere.  The positive half twist on positions i, i+1 is

    T_i = [[1 - t, t], [1, 0]]                       (T_i^2 = local block, q = 2)

The global generator of event k is g_k = C M C^-1 where C multiplies, in
order of travel, the half twists of every braid word and every earlier block
reversal (positive Garside word of the block) between the basepoint and the
event.  g_k - I has rank at most q, so it is kept in factored form
g_k = I + U W with U = C[:, B] and W = (M - I)_B C^-1[B, :].

Public API
----------
EigenRep
half_twist(i, sign, rep)            -> matrix
local_matrix(i0, q, rep)            -> matrix
global_generators(diagram, rep)     -> list[GlobalGenerator]
invariant_dim(gens, rep)            -> int
build_diagram(A, ...)               -> BraidedWiringDiagram
milnor_dim(A, m, ...)               -> int
first_betti_number(A, ...)          -> int
event_profile(diagram, rep)         -> list[EventProfile]
product_diagnostic(gens, rep)       -> int
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Literal, Optional, Sequence, Union

from ..settings import default_seed, max_retries
from .arrangement import Arrangement
from .cyclo import CycloNum, euler_phi, zeta
from .errors import GenericityError, InvariantBreach, StabilizationError
from .linalg import EchelonBasis, Matrix, identity, mat_mul, rank, rref
from .projection import random_point_on
from .sweep import sweep_real
from .tracking import track_complex
from .wiring import BraidedWiringDiagram, garside_word, replay_permutation

logger = logging.getLogger(__name__)

DiagramMethod = Literal["auto", "sweep", "track"]
DIndex = Union[int, Literal["search"], None]


@dataclass(frozen=True)
class EigenRep:
    """A primitive m-th root of unity t acting on n = d - 1 sigma-cycle coordinates."""

    m: int
    t: CycloNum
    dim: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"m must be at least 2, got {self.m}")
        if self.dim < 1:
            raise ValueError(f"representation dimension must be positive, got {self.dim}")
        if self.t.order != self.m:
            raise ValueError(f"t must live in Q(zeta_{self.m}), got order {self.t.order}")
        one = CycloNum.one(self.m)
        if self.t**self.m != one or any(self.t**j == one for j in range(1, self.m)):
            raise ValueError(f"{self.t} is not a primitive {self.m}-th root of unity")

    @classmethod
    def primitive(cls, m: int, dim: int, k: int = 1) -> "EigenRep":
        if gcd(k, m) != 1:
            raise ValueError(f"zeta_{m}^{k} is not primitive")
        return cls(m, zeta(m, k % m), dim)

    def conjugate(self) -> "EigenRep":
        return EigenRep(self.m, self.t.conjugate(), self.dim)

    @property
    def one(self) -> CycloNum:
        return CycloNum.one(self.m)

    @property
    def zero(self) -> CycloNum:
        return CycloNum.zero(self.m)


# ---------------------------------------------------------------------------
# Local models
# ---------------------------------------------------------------------------


def _local_block(q: int, t: CycloNum) -> Matrix:
    powers = [t**c for c in range(q)]
    tq = t**q
    return [[(tq if r == c else 0) + (1 - t) * powers[c] for c in range(q)] for r in range(q)]


def local_matrix(i0: int, q: int, rep: EigenRep) -> Matrix:
    """Local monodromy of an event on the 1-based block i0..i0+q-1."""
    if q < 1 or i0 < 1 or i0 + q - 1 > rep.dim:
        raise ValueError(f"block {i0}..{i0 + q - 1} out of range for dimension {rep.dim}")
    out = identity(rep.dim, rep.m)
    block = _local_block(q, rep.t)
    for r in range(q):
        for c in range(q):
            out[i0 - 1 + r][i0 - 1 + c] = block[r][c]
    return out


def half_twist(i: int, sign: int, rep: EigenRep) -> Matrix:
    if not 1 <= i <= rep.dim - 1:
        raise ValueError(f"half twist index {i} out of range [1, {rep.dim - 1}]")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    t = rep.t
    out = identity(rep.dim, rep.m)
    a, b = i - 1, i
    if sign > 0:
        out[a][a], out[a][b], out[b][a], out[b][b] = 1 - t, t, rep.one, rep.zero
    else:
        u = t.inverse()
        out[a][a], out[a][b], out[b][a], out[b][b] = rep.zero, rep.one, u, 1 - u
    return out


class _Transport:
    """C and C^-1 under right multiplication of C by half twists."""

    def __init__(self, rep: EigenRep) -> None:
        self.t = rep.t
        self.t_inv = rep.t.inverse()
        self.c = identity(rep.dim, rep.m)
        self.c_inv = identity(rep.dim, rep.m)

    def apply(self, letter: int) -> None:
        a = abs(letter) - 1
        b = a + 1
        t, u = self.t, self.t_inv
        if letter > 0:
            for row in self.c:
                x, y = row[a], row[b]
                row[a], row[b] = (1 - t) * x + y, t * x
            ra, rb = self.c_inv[a], self.c_inv[b]
            self.c_inv[a] = list(rb)
            self.c_inv[b] = [u * x + (1 - u) * y for x, y in zip(ra, rb)]
        else:
            for row in self.c:
                x, y = row[a], row[b]
                row[a], row[b] = u * y, x + (1 - u) * y
            ra, rb = self.c_inv[a], self.c_inv[b]
            self.c_inv[a] = [(1 - t) * x + t * y for x, y in zip(ra, rb)]
            self.c_inv[b] = list(ra)

    def word(self, letters: Sequence[int]) -> None:
        for letter in letters:
            self.apply(letter)


@dataclass(frozen=True)
class GlobalGenerator:
    event: int
    block: tuple[int, ...]
    left: Matrix
    right: Matrix

    def matrix(self) -> Matrix:
        out = mat_mul(self.left, self.right)
        for k in range(len(out)):
            out[k][k] = out[k][k] + 1
        return out


def global_generators(diagram: BraidedWiringDiagram, rep: EigenRep) -> list[GlobalGenerator]:
    if rep.dim != diagram.strands:
        raise ValueError(f"representation dimension {rep.dim} != strand count {diagram.strands}")
    replay_permutation(diagram)
    transport = _Transport(rep)
    gens: list[GlobalGenerator] = []
    for k, (word, event) in enumerate(diagram.steps()):
        if event is None:
            break
        transport.word(word)
        block = tuple(range(event.start - 1, event.start - 1 + event.size))
        local = _local_block(event.size, rep.t)
        for j in range(event.size):
            local[j][j] = local[j][j] - 1
        left = [[row[c] for c in block] for row in transport.c]
        right = mat_mul(local, [transport.c_inv[r] for r in block])
        gens.append(GlobalGenerator(k, block, left, right))
        transport.word(garside_word(event.start, event.size))
    return gens


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------

GeneratorLike = Union[GlobalGenerator, Matrix]


def _factored(g: GeneratorLike, rep: EigenRep) -> tuple[Matrix, Matrix]:
    if isinstance(g, GlobalGenerator):
        return g.left, g.right
    delta = [[x - (1 if r == c else 0) for c, x in enumerate(row)] for r, row in enumerate(g)]
    return identity(rep.dim, rep.m), delta


def _quotient_rows(g: GeneratorLike, rep: EigenRep) -> list[list[CycloNum]]:
    """Rows spanning the row space of P (g - I), P(w) = (w_i - w_n)_i."""
    left, right = _factored(g, rep)
    n = rep.dim
    # U is injective, so g fixes the all-ones vector iff the rows of W sum to zero
    if any(not sum(row, rep.zero).is_zero() for row in right):
        raise InvariantBreach("monodromy matrix does not fix the all-ones vector")
    projected = [[x - y for x, y in zip(left[i], left[n - 1])] for i in range(n - 1)]
    basis, _ = rref(projected) if projected else ([], [])
    return [
        [sum((a * b for a, b in zip(coeffs, column)), rep.zero) for column in zip(*right)]
        for coeffs in basis
    ]


def invariant_dim(gens: Sequence[GeneratorLike], rep: EigenRep) -> int:
    """Dimension of the joint fixed space on the quotient by the all-ones vector."""
    n = rep.dim
    echelon = EchelonBasis(n, rep.m)
    for g in gens:
        for row in _quotient_rows(g, rep):
            echelon.add(row)
            if echelon.rank == n - 1:
                return 0
    return n - echelon.rank - 1


def product_diagnostic(gens: Sequence[GeneratorLike], rep: EigenRep) -> int:
    """rank of (g_1 ... g_r - I) on the quotient; a diagnostic, never asserted."""
    total = identity(rep.dim, rep.m)
    for g in gens:
        total = mat_mul(total, g.matrix() if isinstance(g, GlobalGenerator) else g)
    return rep.dim - 1 - invariant_dim([total], rep)


@dataclass(frozen=True)
class EventProfile:
    event: int
    flat: tuple[int, ...]
    q: int
    rank: int
    local_invariant_dim: int
    expected: tuple[int, int, int]


def event_profile(diagram: BraidedWiringDiagram, rep: EigenRep) -> list[EventProfile]:
    """
    Per event: block size, rank of g - I and the fixed-space dimension on the
    quotient.  rank is q - 1 when m does not divide q and at most 1 when it
    does; ``expected`` is the (d - q - 1, d - 2, q - 1) bookkeeping triple.
    """
    d = diagram.d
    out = []
    for g, event in zip(global_generators(diagram, rep), diagram.events):
        delta = [row[:] for row in _local_block(event.size, rep.t)]
        for j in range(event.size):
            delta[j][j] = delta[j][j] - 1
        out.append(
            EventProfile(
                event=g.event,
                flat=tuple(event.flat),
                q=event.size,
                rank=rank(delta),
                local_invariant_dim=invariant_dim([g], rep),
                expected=(d - event.size - 1, d - 2, event.size - 1),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


def _diagram_on_line(
    arrangement: Arrangement,
    index: int,
    base_seed: int,
    use_sweep: bool,
    budget: int,
) -> BraidedWiringDiagram:
    last: Optional[StabilizationError] = None
    for attempt in range(budget):
        center, _ = random_point_on(arrangement, index, base_seed + attempt)
        if use_sweep:
            return sweep_real(arrangement, index, center)
        try:
            return track_complex(arrangement, index, center, seed=base_seed + attempt)
        except StabilizationError as exc:
            logger.warning("monodromy: RETRY | d_index=%d seed=%d reason=%s", index, base_seed + attempt, exc)
            last = exc
    raise StabilizationError(
        f"tracking failed on line {index} (seed {base_seed}); last failure: {last}",
        last.refinements if last is not None else 0,
        centres=budget,
    )


def build_diagram(
    arrangement: Arrangement,
    d_index: DIndex = None,
    seed: Optional[int] = None,
    method: DiagramMethod = "auto",
    retries: Optional[int] = None,
) -> BraidedWiringDiagram:
    """
    Generic projection centre plus sweep (rational input) or tracker, retried
    with fresh centres.  ``d_index`` picks L_d (default: the last line);
    ``"search"`` tries the last line and then every other line in turn until
    one admits a generic centre and a stable diagram.
    """
    if arrangement.ambient_dim != 3:
        raise ValueError(
            f"monodromy needs a line arrangement (ambient_dim 3), got {arrangement.ambient_dim}; "
            "take a generic_section first"
        )
    if method not in ("auto", "sweep", "track"):
        raise ValueError(f"unknown diagram method {method!r}")
    if isinstance(d_index, str) and d_index != "search":
        raise ValueError(f"d_index must be an index or 'search', got {d_index!r}")
    base_seed = default_seed() if seed is None else seed
    use_sweep = method == "sweep" or (method == "auto" and arrangement.is_rational())
    budget = retries if retries is not None else max_retries()
    d = arrangement.d

    if d_index != "search":
        index = d - 1 if d_index is None else d_index
        return _diagram_on_line(arrangement, index, base_seed, use_sweep, budget)

    failures: dict[int, str] = {}
    for index in [d - 1, *range(d - 1)]:
        try:
            diagram = _diagram_on_line(arrangement, index, base_seed, use_sweep, budget)
        except (GenericityError, StabilizationError) as exc:
            logger.warning("monodromy: SKIP LINE | d_index=%d reason=%s", index, exc)
            failures[index] = str(exc)
            continue
        logger.info("monodromy: LINE FOUND | d_index=%d skipped=%d", index, len(failures))
        return diagram
    raise GenericityError(
        f"no line at infinity admits a generic projection and a stable diagram (seed {base_seed})",
        d,
        failures,
    )


def milnor_dim(
    arrangement: Arrangement,
    m: int,
    k: int = 1,
    diagram: Optional[BraidedWiringDiagram] = None,
    d_index: DIndex = None,
    seed: Optional[int] = None,
    method: DiagramMethod = "auto",
) -> int:
    """
    dim H^1(F, C)_lambda for lambda of order m, computed with t = zeta_m^k.
    Zero when m does not divide d.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if arrangement.ambient_dim != 3:
        raise ValueError(f"milnor_dim needs a line arrangement, got ambient_dim {arrangement.ambient_dim}")
    if arrangement.d % m:
        return 0
    if diagram is None:
        diagram = build_diagram(arrangement, d_index, seed, method)
    rep = EigenRep.primitive(m, arrangement.d - 1, k)
    value = invariant_dim(global_generators(diagram, rep), rep)
    logger.info(
        "monodromy: DIM | m=%d k=%d d=%d d_index=%d method=%s dim=%d",
        m,
        k,
        arrangement.d,
        diagram.d_index,
        diagram.method,
        value,
    )
    return value


def first_betti_number(
    arrangement: Arrangement,
    diagram: Optional[BraidedWiringDiagram] = None,
    seed: Optional[int] = None,
) -> int:
    """b_1(F) = (d - 1) + sum over m | d, m >= 2 of phi(m) * milnor_dim(A, m)."""
    if diagram is None:
        diagram = build_diagram(arrangement, seed=seed)
    d = arrangement.d
    total = d - 1
    for m in range(2, d + 1):
        if d % m == 0:
            total += euler_phi(m) * milnor_dim(arrangement, m, diagram=diagram)
    return total


__all__ = [
    "EigenRep",
    "EventProfile",
    "GlobalGenerator",
    "build_diagram",
    "event_profile",
    "first_betti_number",
    "global_generators",
    "half_twist",
    "invariant_dim",
    "local_matrix",
    "milnor_dim",
    "product_diagnostic",
]
