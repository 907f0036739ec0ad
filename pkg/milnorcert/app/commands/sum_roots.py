from ..milnor.cyclo import nonvanishing_guaranteed, sum_roots, vanishing_subsets
from ..schemas import RunConfig, SumRootsReport
from . import EXIT_OK, emit


def run(cfg: RunConfig) -> int:
    m = cfg.m
    value = sum_roots(m, cfg.residues)
    size = cfg.search if cfg.search is not None else len(set(r % m for r in cfg.residues))
    report = SumRootsReport(
        m=m,
        residues=list(cfg.residues),
        value=str(value),
        is_zero=value.is_zero(),
        nonvanishing_guaranteed=nonvanishing_guaranteed(m, size),
        vanishing_subsets=(
            [list(s) for s in vanishing_subsets(m, cfg.search)] if cfg.search is not None else None
        ),
    )
    emit(report, cfg.output)
    return EXIT_OK
