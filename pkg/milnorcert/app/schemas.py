from enum import Enum
from pathlib import Path
from typing import Any, List, Literal, Optional, Union

from pydantic import BaseModel, Field, NonNegativeInt, model_validator

from .. import __version__
from .milnor.certificates import Checker, Status, Theorem


class Command(str, Enum):
    analyze = "analyze"
    dim = "dim"
    generate = "generate"
    section = "section"
    sum_roots = "sum-roots"
    verify_cert = "verify-cert"


class Method(str, Enum):
    criteria = "criteria"
    monodromy = "monodromy"
    fox = "fox"
    both = "both"
    all = "all"


class DiagramChoice(str, Enum):
    auto = "auto"
    sweep = "sweep"
    track = "track"


_NEEDS_INPUT = {Command.analyze, Command.dim, Command.section, Command.verify_cert}


class RunConfig(BaseModel):
    command: Command
    input: Optional[Path] = None
    m: Optional[int] = Field(None, ge=2)
    method: Method = Method.monodromy
    seed: int = 0
    output: Optional[Path] = None
    verbosity: int = Field(1, ge=0, le=2)
    strict: bool = False
    jobs: int = Field(1, ge=1)
    lattice_only: bool = False
    d_index: Optional[Union[NonNegativeInt, Literal["search"]]] = None
    diagram: DiagramChoice = DiagramChoice.auto
    family: Optional[str] = None
    family_params: dict[str, Any] = Field(default_factory=dict)
    certificate: Optional[Path] = None
    residues: List[int] = Field(default_factory=list)
    search: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _check_command_inputs(self) -> "RunConfig":
        if self.command in _NEEDS_INPUT and self.input is None:
            raise ValueError(f"{self.command.value} needs an arrangement file")
        if self.command is Command.sum_roots and self.m is None:
            raise ValueError("sum-roots needs --m")
        if self.command is Command.verify_cert and self.certificate is None:
            raise ValueError("verify-cert needs a certificate file")
        if self.command is Command.generate and not self.family:
            raise ValueError("generate needs a family name")
        return self


class OrderDim(BaseModel):
    m: int
    monodromy: Optional[int] = None
    monodromy_conjugate: Optional[int] = None
    fox: Optional[int] = None
    criteria: Optional[Status] = None
    agree: bool = True


class DimReport(BaseModel):
    tool_version: str = __version__
    arrangement_hash: str
    seed: int
    d: int
    d_index: Optional[int] = None
    diagram_method: Optional[str] = None
    center: List[str] = Field(default_factory=list)
    orders: List[OrderDim]
    first_betti_number: Optional[int] = None


class SumRootsReport(BaseModel):
    tool_version: str = __version__
    m: int
    residues: List[int]
    value: str
    is_zero: bool
    nonvanishing_guaranteed: bool
    vanishing_subsets: Optional[List[List[int]]] = None


class SectionReport(BaseModel):
    tool_version: str = __version__
    arrangement_hash: str
    section_hash: str
    seed: int
    attempts: int
    basis: List[List[int]]
    correspondence: List[List[int]]
    arrangement: str


class GenerateReport(BaseModel):
    tool_version: str = __version__
    family: str
    params: dict[str, Any]
    seed: int
    arrangement_hash: str
    d: int
    census: dict[int, int]
    output: Optional[str] = None
    arrangement: Optional[str] = None


class VerifyReport(BaseModel):
    tool_version: str = __version__
    arrangement_hash: str
    m: int
    checker: Checker
    status: Status
    theorem: Optional[Theorem] = None
    verified: bool
