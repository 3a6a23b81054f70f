"""Semantics identifiers and the validated spec that selects one."""

from enum import Enum
from typing import Dict, FrozenSet, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from rpq_lab.core.database import Database
from rpq_lab.core.errors import InputError


class SemanticsId(str, Enum):
    """Semantics ids; the value is the command-line token."""

    TRAIL = "trail"
    ACYCLIC = "acyclic"
    SWC = "swc"
    TWO_AC = "2ac"
    SHORTEST = "shortest"
    SHORTEST_TRAIL = "shortest-trail"
    SHORTLEX = "shortlex"
    SUBWALK_MIN = "subwalk-min"
    MIN_MULTISET = "min-multiset"
    SHMS = "shms"
    SHVC = "shvc"
    SHEC = "shec"
    SHAC = "shac"
    BINDING_TRAIL = "binding-trail"
    CHEAPEST = "cheapest"
    LOG_LENGTH = "log-length"
    GIVING_UP = "giving-up"
    WEIRD = "weird"

    @property
    def short(self) -> str:
        return SHORT_NAMES[self]

    @classmethod
    def from_token(cls, token: str) -> "SemanticsId":
        try:
            return cls(token.strip().lower())
        except ValueError:
            by_short = {v.lower(): k for k, v in SHORT_NAMES.items()}
            if token.strip().lower() in by_short:
                return by_short[token.strip().lower()]
            known = ", ".join(s.value for s in cls)
            raise InputError(f"unknown semantics {token!r} (known: {known})")


SHORT_NAMES: Dict[SemanticsId, str] = {
    SemanticsId.TRAIL: "Tr",
    SemanticsId.ACYCLIC: "Ac",
    SemanticsId.SWC: "SWC",
    SemanticsId.TWO_AC: "2Ac",
    SemanticsId.SHORTEST: "Sh",
    SemanticsId.SHORTEST_TRAIL: "ShT",
    SemanticsId.SHORTLEX: "ShL",
    SemanticsId.SUBWALK_MIN: "SM",
    SemanticsId.MIN_MULTISET: "MM",
    SemanticsId.SHMS: "ShMS",
    SemanticsId.SHVC: "ShVC",
    SemanticsId.SHEC: "ShEC",
    SemanticsId.SHAC: "ShAC",
    SemanticsId.BINDING_TRAIL: "BT",
    SemanticsId.CHEAPEST: "ChW",
    SemanticsId.LOG_LENGTH: "LL",
    SemanticsId.GIVING_UP: "GU",
    SemanticsId.WEIRD: "WEIRD",
}

FILTER_BASED: FrozenSet[SemanticsId] = frozenset(
    {SemanticsId.TRAIL, SemanticsId.ACYCLIC, SemanticsId.SWC, SemanticsId.TWO_AC}
)
ORDER_BASED: FrozenSet[SemanticsId] = frozenset(
    {
        SemanticsId.SHORTEST,
        SemanticsId.SHORTLEX,
        SemanticsId.SUBWALK_MIN,
        SemanticsId.MIN_MULTISET,
        SemanticsId.SHMS,
        SemanticsId.CHEAPEST,
    }
)
COVERING: FrozenSet[SemanticsId] = frozenset(
    {SemanticsId.SHVC, SemanticsId.SHEC, SemanticsId.SHAC}
)


# ============================================================================
# SPEC MODEL
# ============================================================================

class SemanticsSpec(BaseModel):
    """A semantics id plus its parameters"""
    model_config = ConfigDict(frozen=True)

    id: SemanticsId
    costs: Optional[Dict[str, int]] = None  # ChW only: label -> positive cost
    default_cost: Optional[int] = None  # ChW only: cost of labels missing from `costs`
    cap: Optional[int] = None  # result cap; None means unlimited

    @field_validator("costs")
    @classmethod
    def _positive_costs(cls, costs):
        if costs is not None:
            for label, value in costs.items():
                if value <= 0:
                    raise ValueError(f"cost for {label} must be positive, got {value}")
        return costs

    @field_validator("default_cost", "cap")
    @classmethod
    def _positive(cls, value):
        if value is not None and value <= 0:
            raise ValueError("must be positive")
        return value

    @model_validator(mode="after")
    def _costs_only_for_cheapest(self):
        if self.id is not SemanticsId.CHEAPEST and (self.costs or self.default_cost):
            raise ValueError(f"{self.id.value} takes no cost table")
        return self

    @classmethod
    def of(cls, token, **params) -> "SemanticsSpec":
        sid = token if isinstance(token, SemanticsId) else SemanticsId.from_token(token)
        return cls(id=sid, **params)

    @property
    def name(self) -> str:
        return self.id.short

    def cost_of(self, label: str) -> int:
        if self.costs is not None and label in self.costs:
            return self.costs[label]
        if self.default_cost is not None:
            return self.default_cost
        raise InputError(f"no cost for label {label!r} and no default cost")

    def check_costs(self, db: Database) -> None:
        """Raise InputError unless every label of `db` has a cost."""
        for label in sorted(db.labels):
            self.cost_of(label)

    def with_cap(self, cap: Optional[int]) -> "SemanticsSpec":
        return self.model_copy(update={"cap": cap})
