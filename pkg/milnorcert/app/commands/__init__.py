from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from ..logging_utils import get_logger
from ..milnor.arrangement import Arrangement
from ..milnor.formats import load_arrangement

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_DISAGREEMENT = 4


def emit(report: BaseModel, output: Optional[Path] = None) -> str:
    """Print the JSON report on stdout and optionally write it to ``output``."""
    text = report.model_dump_json(indent=2)
    print(text)
    if output is not None:
        Path(output).write_text(text + "\n", encoding="utf-8")
    return text


def read_arrangement(path: Optional[Path]) -> Arrangement:
    if path is None:
        raise ValueError("an arrangement file is required")
    arrangement = load_arrangement(path)
    get_logger().info(
        "cli: INPUT | path=%s hash=%s d=%d ambient_dim=%d field_order=%d",
        path,
        arrangement.content_hash,
        arrangement.d,
        arrangement.ambient_dim,
        arrangement.field_order,
    )
    return arrangement
