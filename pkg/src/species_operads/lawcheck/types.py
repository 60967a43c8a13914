"""
Law-check type definitions.

Defines the law identifiers, verdicts, size bounds and the report record
produced by every check.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..env import get_env_bool, get_env_int


class Law(str, Enum):
    """Identifiers of the checked laws"""

    A1 = "A1"  # parallel associativity
    A2 = "A2"  # nested associativity
    N1 = "N1"  # naturality of composition
    N2 = "N2"  # naturality of units
    U1 = "U1"  # left unit
    U2 = "U2"  # right unit
    EQ1 = "EQ1"  # root exchange identity
    RED = "RED"  # composition operads over com reduce to tree operads
    ORACLE = "ORACLE"  # agreement with the edge-list implementation


OPERAD_AXIOMS = (Law.A1, Law.A2, Law.N1, Law.N2, Law.U1, Law.U2)


class Verdict(str, Enum):
    HOLDS = "holds"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Bounds:
    """
    Size limits for exhaustive checks.

    Attributes:
        max_s: Largest |S| (outer element)
        max_t: Largest |T| (first inserted element)
        max_r: Largest |R| (second inserted element)
        max_total: Optional limit on the glued label set of one instance,
            |S| + |T| + |R| - 2 for triples and |S| + |T| - 1 for pairs
        max_instances: Refuse to run checks estimated above this count
        allow_large: Ignore max_instances
    """

    max_s: int = 3
    max_t: int = 2
    max_r: int = 2
    max_total: Optional[int] = None
    max_instances: int = 500_000
    allow_large: bool = False

    def __post_init__(self):
        for name in ("max_s", "max_t", "max_r"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}")

    @classmethod
    def from_env(cls, **overrides) -> "Bounds":
        """Bounds from OPERADS_* variables; keyword arguments take precedence"""
        values = {
            "max_s": get_env_int("OPERADS_MAX_S", 3),
            "max_t": get_env_int("OPERADS_MAX_T", 2),
            "max_r": get_env_int("OPERADS_MAX_R", 2),
            "max_instances": get_env_int("OPERADS_MAX_INSTANCES", 500_000),
            "allow_large": get_env_bool("OPERADS_ALLOW_LARGE", False),
        }
        values.update(overrides)
        return cls(**values)

    def composite(self) -> "Bounds":
        """Bounds for composition operads: same limits plus a glued size cap"""
        total = self.max_total or get_env_int("OPERADS_MAX_TOTAL", 4)
        return Bounds(
            self.max_s, self.max_t, self.max_r, total, self.max_instances, self.allow_large
        )

    def fits(self, *sizes: int) -> bool:
        """Whether gluing label sets of these sizes stays within max_total"""
        if self.max_total is None:
            return True
        # Each insertion removes the label it is inserted at
        return sum(sizes) - (len(sizes) - 1) <= self.max_total

    def to_dict(self) -> dict:
        return {
            "max_s": self.max_s,
            "max_t": self.max_t,
            "max_r": self.max_r,
            "max_total": self.max_total,
        }


@dataclass(frozen=True)
class Witness:
    """The first failing instance: its inputs and both evaluated sides"""

    inputs: Dict[str, str]
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"inputs": dict(self.inputs), "lhs": self.lhs, "rhs": self.rhs}

    @classmethod
    def from_dict(cls, data: dict) -> "Witness":
        return cls(inputs=dict(data["inputs"]), lhs=data["lhs"], rhs=data["rhs"])


@dataclass
class LawReport:
    """
    Outcome of one exhaustive law check.

    The verdict is "holds" exactly when there is no witness.
    """

    law: Law
    subject: str
    instances: int
    verdict: Verdict
    witness: Optional[Witness] = None
    expected: Verdict = Verdict.HOLDS
    elapsed_ms: float = 0.0
    bounds: Dict[str, Optional[int]] = field(default_factory=dict)

    def __post_init__(self):
        if (self.verdict == Verdict.HOLDS) != (self.witness is None):
            raise ValueError(
                f"Report for {self.law.value} on {self.subject}: verdict {self.verdict.value} "
                f"is inconsistent with the witness"
            )

    @property
    def unexpected(self) -> bool:
        return self.verdict != self.expected

    def summary(self) -> str:
        status = "UNEXPECTED" if self.unexpected else "ok"
        note = " (expected)" if self.verdict == Verdict.COUNTEREXAMPLE and not self.unexpected else ""
        return (
            f"{self.law.value:<6} {self.subject:<20} {self.verdict.value}{note} "
            f"[{self.instances} instances, {self.elapsed_ms:.0f} ms] {status}"
        )

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization"""
        return {
            "law": self.law.value,
            "subject": self.subject,
            "instances": self.instances,
            "verdict": self.verdict.value,
            "expected": self.expected.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "bounds": dict(self.bounds),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LawReport":
        """Create from dictionary"""
        witness = data.get("witness")
        return cls(
            law=Law(data["law"]),
            subject=data["subject"],
            instances=data["instances"],
            verdict=Verdict(data["verdict"]),
            witness=Witness.from_dict(witness) if witness else None,
            expected=Verdict(data.get("expected", Verdict.HOLDS.value)),
            elapsed_ms=data.get("elapsed_ms", 0.0),
            bounds=dict(data.get("bounds", {})),
        )
