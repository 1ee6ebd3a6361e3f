"""The stabilizer-code container shared by the builders and the analyzers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import SipViolation
from .gf2 import Gf2Matrix
from .symplectic import sip_check


@dataclass(frozen=True)
class StabilizerCode:
    """An [[N, K]] stabilizer code given by m = N - K independent generator
    rows in binary form H = [H1 | H2].

    ``family`` is one of "type1", "qcs-a", "qcs-b"; ``provenance`` records
    how the matrix was produced (prime, variant, layout, removed rows, ...).
    """

    n_qubits: int
    h: Gf2Matrix
    family: str
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.h.cols != 2 * self.n_qubits:
            raise ValueError("H must have 2N columns")

    @property
    def m(self) -> int:
        return self.h.rows

    @property
    def k_logical(self) -> int:
        return self.n_qubits - self.m

    @property
    def h1(self) -> Gf2Matrix:
        return self.h.columns(0, self.n_qubits)

    @property
    def h2(self) -> Gf2Matrix:
        return self.h.columns(self.n_qubits, 2 * self.n_qubits)

    @property
    def trivial(self) -> bool:
        """True for K = 0 codes (no logical qubits)."""
        return self.k_logical == 0

    def params(self) -> str:
        return f"[[{self.n_qubits},{self.k_logical}]]"

    def validate(self) -> None:
        """Check the defining invariants: commuting rows, independent rows."""
        if not sip_check(self.h1, self.h2):
            raise SipViolation(f"{self.params()} rows do not commute pairwise")
        if self.h.rank() != self.m:
            raise ValueError(f"{self.params()} generator rows are dependent")
