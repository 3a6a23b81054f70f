"""Parameter and report records for the property lab."""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from rpq_lab.config.config import (
    ALPHABET_SIZE,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    MAX_EDGES,
    MAX_VERTICES,
    REGEX_DEPTH,
    SMALL_MAX_EDGES,
    SMALL_MAX_VERTICES,
    SMALL_REGEX_DEPTH,
)


class Verdict(str, Enum):
    NO_COUNTEREXAMPLE = "no-counterexample"
    COUNTEREXAMPLE = "counterexample"
    SKIPPED = "skipped"
    INCONCLUSIVE = "inconclusive"  # fewer effective random trials than requested


class Expectation(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class InclusionStatus(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"


# ============================================================================
# PARAMETERS
# ============================================================================

class GenParams(BaseModel):
    """Random instance parameters"""
    seed: int = DEFAULT_SEED
    max_vertices: int = Field(MAX_VERTICES, gt=0)
    max_edges: int = Field(MAX_EDGES, gt=0)
    alphabet: int = Field(ALPHABET_SIZE, gt=0, le=26)
    depth: int = Field(REGEX_DEPTH, gt=0)
    trials: int = Field(DEFAULT_TRIALS, gt=0)

    @property
    def labels(self) -> List[str]:
        return [chr(ord("a") + i) for i in range(self.alphabet)]

    def small(self) -> "GenParams":
        """The same parameters shrunk to the sizes used by the slower checks."""
        return self.model_copy(update={
            "max_vertices": min(self.max_vertices, SMALL_MAX_VERTICES),
            "max_edges": min(self.max_edges, SMALL_MAX_EDGES),
            "depth": min(self.depth, SMALL_REGEX_DEPTH),
        })

    def with_trials(self, trials: int) -> "GenParams":
        return self.model_copy(update={"trials": trials})


# ============================================================================
# REPORTS
# ============================================================================

class PropertyReport(BaseModel):
    """Outcome of one property search for one semantics"""
    prop: str
    semantics: str
    verdict: Verdict
    trials: int = 0  # effective trials, fixtures included
    random_trials: int = 0
    skipped_trials: int = 0
    elapsed: float = 0.0
    seed: int = DEFAULT_SEED
    trial: Optional[int] = None  # random trial index of the counterexample; None for fixtures
    fixture: Optional[str] = None
    instance: Optional[Dict[str, Any]] = None  # LabInstance.to_dict() of the counterexample
    message: Optional[str] = None

    def line(self) -> str:
        return f"PROP {self.prop} {self.semantics} {self.verdict.value} {self.trials}"


class MatrixRow(BaseModel):
    prop: str
    semantics: str
    expected: Expectation
    verdict: Verdict
    trials: int
    skipped_trials: int = 0
    witness: Optional[str] = None
    ok: bool


class CrossCheck(BaseModel):
    """Element-inclusion respect against monotony for one order-based semantics"""
    semantics: str
    monotony: Verdict
    element_inclusion: Verdict
    ok: bool


class MatrixResult(BaseModel):
    params: GenParams
    rows: List[MatrixRow]
    reports: List[PropertyReport]
    cross_checks: List[CrossCheck] = []
    generated_at: str

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and all(c.ok for c in self.cross_checks)

    @property
    def mismatches(self) -> List[MatrixRow]:
        return [r for r in self.rows if not r.ok]


class InclusionReport(BaseModel):
    """Outcome of one lattice edge or incomparability direction"""
    sub: str
    sup: str
    expected: InclusionStatus
    status: InclusionStatus
    trials: int = 0
    skipped_trials: int = 0
    witness: Optional[str] = None
    strict: Optional[bool] = None  # strictness witness confirmed; None when the edge is refuted
    counterexample: Optional[Dict[str, Any]] = None
    ok: bool

    def line(self) -> str:
        return f"INCL {self.sub} {self.sup} {self.status.value} {self.trials}"


class BenchRecord(BaseModel):
    family: str
    semantics: str
    n: int
    millis: int
    results: int
    max_delay_ms: Optional[float] = None

    def line(self) -> str:
        return f"BENCH {self.semantics} {self.n} {self.millis}"
