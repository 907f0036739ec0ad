from ..milnor.section import generic_section
from ..schemas import RunConfig, SectionReport
from . import EXIT_OK, emit, read_arrangement


def run(cfg: RunConfig) -> int:
    arrangement = read_arrangement(cfg.input)
    result = generic_section(arrangement, cfg.seed)
    emit(
        SectionReport(
            arrangement_hash=arrangement.content_hash,
            section_hash=result.arrangement.content_hash,
            seed=cfg.seed,
            attempts=result.attempts,
            basis=[list(row) for row in result.basis],
            correspondence=[list(pair) for pair in result.correspondence],
            arrangement=result.arrangement.canonical_text,
        ),
        cfg.output,
    )
    return EXIT_OK
