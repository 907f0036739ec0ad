from ..logging_utils import get_logger
from ..milnor.certificates import Status
from ..milnor.criteria import analyze_all
from ..schemas import RunConfig
from . import EXIT_INCONCLUSIVE, EXIT_OK, emit, read_arrangement

logger = get_logger()


def run(cfg: RunConfig) -> int:
    arrangement = read_arrangement(cfg.input)
    orders = [cfg.m] if cfg.m is not None else None
    report = analyze_all(arrangement, jobs=cfg.jobs, lattice_only=cfg.lattice_only, orders=orders)
    report = report.model_copy(update={"seed": cfg.seed})
    emit(report, cfg.output)

    for entry in report.orders:
        logger.info(
            "analyze: ORDER | m=%d status=%s theorem=%s",
            entry.m,
            entry.status.value,
            entry.theorem.value if entry.theorem else None,
        )
    inconclusive = [entry.m for entry in report.orders if entry.status is Status.inconclusive]
    if cfg.strict and inconclusive:
        logger.warning("analyze: STRICT | inconclusive orders %s", inconclusive)
        return EXIT_INCONCLUSIVE
    return EXIT_OK
