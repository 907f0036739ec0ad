from typing import Optional

from ..logging_utils import get_logger
from ..milnor.arrangement import Arrangement
from ..milnor.certificates import Status
from ..milnor.criteria import check_theorem1, check_theorem2
from ..milnor.cyclo import euler_phi
from ..milnor.monodromy import build_diagram, milnor_dim
from ..milnor.oracle import Presentation, fox_h1, presentation_from_diagram
from ..milnor.wiring import BraidedWiringDiagram
from ..schemas import DimReport, Method, OrderDim, RunConfig
from . import EXIT_DISAGREEMENT, EXIT_OK, emit, read_arrangement

logger = get_logger()

_MONODROMY = {Method.monodromy, Method.both, Method.all}
_FOX = {Method.fox, Method.both, Method.all}
_CRITERIA = {Method.criteria, Method.all}


def _criteria_status(arrangement: Arrangement, m: int, lattice_only: bool) -> Status:
    if check_theorem1(arrangement, m, lattice_only).status is Status.vanishes:
        return Status.vanishes
    return check_theorem2(arrangement, m, lattice_only).status


def _order_dim(
    arrangement: Arrangement,
    m: int,
    cfg: RunConfig,
    diagram: Optional[BraidedWiringDiagram],
    pres: Optional[Presentation],
) -> OrderDim:
    entry = OrderDim(m=m)
    divides = arrangement.d % m == 0
    if cfg.method in _MONODROMY:
        entry.monodromy = milnor_dim(arrangement, m, diagram=diagram)
        if cfg.method is Method.all and m > 2:
            entry.monodromy_conjugate = milnor_dim(arrangement, m, k=m - 1, diagram=diagram)
    if cfg.method in _FOX:
        entry.fox = fox_h1(pres, m, arrangement.d // m) if divides else 0
    if cfg.method in _CRITERIA:
        entry.criteria = _criteria_status(arrangement, m, cfg.lattice_only)

    values = {v for v in (entry.monodromy, entry.monodromy_conjugate, entry.fox) if v is not None}
    entry.agree = len(values) <= 1 and not (entry.criteria is Status.vanishes and values - {0})
    if not entry.agree:
        logger.error(
            "dim: DISAGREEMENT | m=%d monodromy=%s conjugate=%s fox=%s criteria=%s",
            m,
            entry.monodromy,
            entry.monodromy_conjugate,
            entry.fox,
            entry.criteria.value if entry.criteria else None,
        )
    return entry


def run(cfg: RunConfig) -> int:
    arrangement = read_arrangement(cfg.input)
    d = arrangement.d
    orders = [cfg.m] if cfg.m is not None else [m for m in range(2, d + 1) if d % m == 0]

    diagram = None
    pres = None
    if cfg.method in _MONODROMY | _FOX:
        diagram = build_diagram(arrangement, cfg.d_index, cfg.seed, cfg.diagram.value)
        if cfg.method in _FOX:
            pres = presentation_from_diagram(diagram)

    entries = [_order_dim(arrangement, m, cfg, diagram, pres) for m in orders]

    betti = None
    if cfg.m is None and all(e.monodromy is not None for e in entries):
        betti = (d - 1) + sum(euler_phi(e.m) * e.monodromy for e in entries)

    report = DimReport(
        arrangement_hash=arrangement.content_hash,
        seed=cfg.seed,
        d=d,
        d_index=diagram.d_index if diagram else None,
        diagram_method=diagram.method if diagram else None,
        center=list(diagram.center) if diagram else [],
        orders=entries,
        first_betti_number=betti,
    )
    emit(report, cfg.output)
    for entry in entries:
        logger.info(
            "dim: ORDER | m=%d monodromy=%s fox=%s agree=%s",
            entry.m,
            entry.monodromy,
            entry.fox,
            entry.agree,
        )
    return EXIT_OK if all(e.agree for e in entries) else EXIT_DISAGREEMENT
