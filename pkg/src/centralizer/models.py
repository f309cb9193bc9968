"""Pydantic models for run configuration and machine-readable reports.

Rationals are serialized as strings such as ``"3/2"``.
"""

import hashlib
import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1
EXECUTION_FIELDS = frozenset({"output", "parallel", "workers"})

Command = Literal[
    "bratteli",
    "dim",
    "kernel",
    "conjecture",
    "characters",
    "s3",
    "iso",
    "hjk",
    "braid",
    "redundancy",
    "paper-suite",
    "presentation",
    "identities",
]


class RunConfig(BaseModel):
    """One CLI invocation."""

    command: Command
    spins: List[List[str]] = Field(default_factory=list)
    lmax: int = Field(default=10, ge=4, le=12)
    lmin: int = Field(default=4, ge=1)
    spin_cap: int = Field(default=8, ge=0, le=8, description="Cap on twice-spin")
    output: Literal["text", "json"] = "text"
    parallel: bool = False
    workers: Optional[int] = Field(default=None, ge=1)

    def canonical_inputs(self) -> Dict[str, Any]:
        """Inputs that determine the results; execution and output options are left out."""
        return self.model_dump(mode="json", exclude=set(EXECUTION_FIELDS))


class CharacterReport(BaseModel):
    """Certified dimension of the quotient at one value of the central generator."""

    spin: str
    c: str
    g: str
    target: int
    upper: Optional[int] = None
    degree: Optional[int] = None
    basis: List[str] = Field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.upper is not None

    @property
    def verified(self) -> bool:
        return self.upper == self.target

    def __str__(self) -> str:
        bound = "inconclusive" if self.upper is None else str(self.upper)
        return f"C={self.c} (G={self.g}): {bound} / {self.target}"


class ConjectureReport(BaseModel):
    """Matrix lower bound against certified abstract upper bound."""

    spins: List[str]
    lower: int
    upper: Optional[int] = None
    target: int
    verified: bool
    kernel: bool = True
    status: Literal["verified", "inconclusive", "mismatch"]
    method: Literal["characters", "direct"] = "characters"
    basis: List[str] = Field(default_factory=list)
    characters: List[CharacterReport] = Field(default_factory=list)
    elapsed: float = 0.0

    def __str__(self) -> str:
        upper = "inconclusive" if self.upper is None else self.upper
        return (
            f"spins ({', '.join(self.spins)}): lower={self.lower} upper={upper} "
            f"target={self.target} -> {self.status}"
        )


class KernelReport(BaseModel):
    """Vanishing of every quotient relation on the Casimir matrices."""

    spins: List[str]
    casimir_identity: bool
    relations: Dict[str, bool]

    @property
    def verified(self) -> bool:
        return self.casimir_identity and all(self.relations.values())


class CouplingReport(BaseModel):
    spins: List[str]
    bratteli: Dict[str, Any]
    coupling: Dict[str, List[str]]
    centralizer_dim: int


class IsoReport(BaseModel):
    """Named boolean checks of one isomorphism, plus supporting numbers."""

    algebra: str
    checks: Dict[str, bool]
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.verified


class CheckResult(BaseModel):
    name: str
    verified: bool
    inconclusive: bool = False
    detail: Dict[str, Any] = Field(default_factory=dict)


class SuiteReport(BaseModel):
    """Versioned envelope written by every command in JSON mode."""

    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    results: List[CheckResult] = Field(default_factory=list)
    verified: bool = True
    inconclusive: List[str] = Field(default_factory=list)

    @classmethod
    def collect(cls, command: str, inputs: Dict[str, Any], results: List[CheckResult]) -> "SuiteReport":
        return cls(
            command=command,
            inputs=inputs,
            results=results,
            verified=all(r.verified for r in results),
            inconclusive=[r.name for r in results if r.inconclusive],
        )

    @property
    def exit_code(self) -> int:
        """1 if any check failed outright, else 2 if any is inconclusive, else 0."""
        if any(not r.verified and not r.inconclusive for r in self.results):
            return 1
        if self.inconclusive:
            return 2
        return 0 if self.verified else 1

    def canonical_json(self) -> str:
        payload = self.model_dump(mode="json", by_alias=True)
        return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def to_json(self) -> str:
        payload = self.model_dump(mode="json", by_alias=True)
        payload["digest"] = self.digest
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


__all__ = [
    "SCHEMA_VERSION",
    "EXECUTION_FIELDS",
    "Command",
    "RunConfig",
    "CharacterReport",
    "ConjectureReport",
    "KernelReport",
    "CouplingReport",
    "IsoReport",
    "CheckResult",
    "SuiteReport",
]
