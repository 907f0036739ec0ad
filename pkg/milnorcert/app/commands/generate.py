from ..logging_utils import get_logger
from ..milnor.arrangement import flat_census, rank2_flats
from ..milnor.families import Family, generate
from ..milnor.formats import dump_arrangement
from ..schemas import GenerateReport, RunConfig
from . import EXIT_OK, emit

logger = get_logger()

# short names accepted on the command line: (family, fixed parameters)
ALIASES = {
    "remark26i": (Family.two_line_joins, {}),
    "remark26ii": (Family.perturbed_grid, {}),
    "remark26iii": (Family.perturbed_grid_shifted, {}),
    "ghessian": (Family.hessian, {}),
}


def resolve_family(name: str, params: dict) -> tuple[Family, dict]:
    key = name.strip().lower().replace("-", "_")
    if key in ALIASES:
        family, fixed = ALIASES[key]
        merged = {**fixed, **params}
        if key == "ghessian" and "a" not in merged:
            raise ValueError("ghessian needs --a (d = (4a - 1)^2 + 3)")
        return family, merged
    try:
        return Family(key), dict(params)
    except ValueError as exc:
        known = sorted([f.value for f in Family] + list(ALIASES))
        raise ValueError(f"unknown family {name!r}; choose one of {known}") from exc


def run(cfg: RunConfig) -> int:
    family, params = resolve_family(cfg.family, cfg.family_params)
    if family is Family.hessian and "a" not in params and "b" not in params:
        params["b"] = 3
    arrangement = generate(family, params, seed=cfg.seed)

    if cfg.output is not None:
        dump_arrangement(arrangement, cfg.output)
        logger.info("generate: WROTE | family=%s d=%d path=%s", family.value, arrangement.d, cfg.output)
    emit(
        GenerateReport(
            family=family.value,
            params=params,
            seed=cfg.seed,
            arrangement_hash=arrangement.content_hash,
            d=arrangement.d,
            census=flat_census(rank2_flats(arrangement)),
            output=str(cfg.output) if cfg.output is not None else None,
            arrangement=None if cfg.output is not None else arrangement.canonical_text,
        )
    )
    return EXIT_OK
