import argparse
import sys
from typing import Any, Optional, Sequence

from .. import __version__
from .commands import EXIT_BAD_INPUT, analyze, dim, generate, section, sum_roots, verify_cert
from .logging_utils import configure_logging, get_logger
from .schemas import Command, DiagramChoice, Method, RunConfig
from .settings import default_jobs, default_seed

EXIT_RUNTIME = 1

HANDLERS = {
    Command.analyze: analyze.run,
    Command.dim: dim.run,
    Command.generate: generate.run,
    Command.section: section.run,
    Command.sum_roots: sum_roots.run,
    Command.verify_cert: verify_cert.run,
}

_FAMILY_FLAGS = ("b", "a", "d", "family_m", "ambient_dim")


def _key_value(text: str) -> tuple[str, Any]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    try:
        return key, int(value)
    except ValueError:
        return key, value


def _d_index(text: str) -> int | str:
    if text == "search":
        return text
    try:
        return int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a line index or 'search', got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for every randomised step (env MILNORCERT_SEED)")
    common.add_argument("-o", "--output", default=None, help="also write the report (generate: the arrangement) here")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    noise.add_argument("-q", "--quiet", action="store_true", help="warnings only on stderr")

    parser = argparse.ArgumentParser(
        prog="milnorcert",
        description="Vanishing certificates and eigenspace dimensions for Milnor fibers of arrangements.",
    )
    parser.add_argument("--version", action="version", version=f"milnorcert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="run both vanishing criteria for every order m")
    p.add_argument("input")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--strict", action="store_true", help="exit 3 when any order is inconclusive")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--lattice-only", action="store_true")

    p = sub.add_parser("dim", parents=[common], help="eigenspace dimensions from the braid monodromy")
    p.add_argument("input")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.monodromy.value)
    p.add_argument(
        "--d-index",
        type=_d_index,
        default=None,
        help="index of the line sent to infinity (default: last), or 'search' to try every line",
    )
    p.add_argument("--diagram", choices=[c.value for c in DiagramChoice], default=DiagramChoice.auto.value)
    p.add_argument("--lattice-only", action="store_true")

    p = sub.add_parser("generate", parents=[common], help="write a member of a named family")
    p.add_argument("family")
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--m", dest="family_m", type=int, default=None)
    p.add_argument("--ambient-dim", type=int, default=None)
    p.add_argument("--param", type=_key_value, action="append", default=[], metavar="KEY=VALUE")

    p = sub.add_parser("section", parents=[common], help="generic plane section of a higher-rank arrangement")
    p.add_argument("input")

    p = sub.add_parser("sum-roots", parents=[common], help="exact sum of m-th roots of unity")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("residues", type=int, nargs="*")
    p.add_argument("--search", type=int, default=None, help="list the vanishing subsets of this size")

    p = sub.add_parser("verify-cert", parents=[common], help="replay a certificate against an arrangement")
    p.add_argument("input")
    p.add_argument("certificate")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, Any] = {
        "command": args.command,
        "seed": args.seed if args.seed is not None else default_seed(),
        "output": args.output,
        "verbosity": 2 if args.verbose else 0 if args.quiet else 1,
    }
    for name in ("input", "m", "strict", "lattice_only", "d_index", "method", "diagram", "certificate", "residues", "search"):
        if getattr(args, name, None) is not None:
            values[name] = getattr(args, name)
    if args.command == Command.analyze.value:
        values["jobs"] = args.jobs if args.jobs is not None else default_jobs()
    if args.command == Command.generate.value:
        params = {name: getattr(args, name) for name in _FAMILY_FLAGS if getattr(args, name) is not None}
        if "family_m" in params:
            params["m"] = params.pop("family_m")
        params.update(dict(args.param))
        values["family"] = args.family
        values["family_params"] = params
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = to_config(args)
    except ValueError as exc:
        configure_logging()
        get_logger().error("cli: BAD INPUT | %s", exc)
        return EXIT_BAD_INPUT

    configure_logging(cfg.verbosity)
    logger = get_logger()
    logger.info("cli: START | command=%s seed=%d version=%s", cfg.command.value, cfg.seed, __version__)
    try:
        code = HANDLERS[cfg.command](cfg)
    except ValueError as exc:
        logger.error("cli: BAD INPUT | %s", exc)
        return EXIT_BAD_INPUT
    except RuntimeError as exc:
        logger.error("cli: FAILED | %s", exc)
        return EXIT_RUNTIME
    logger.info("cli: DONE | command=%s exit=%d", cfg.command.value, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
