"""
Machine-readable output records.

Exact rationals are never emitted as floats: every Fraction becomes a
"num/den" string (or a plain integer string when the denominator is 1).
"""

import dataclasses
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from core.models import ComponentInvariants, Discriminant


def rational_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(value: Any) -> Any:
    """Recursively turn dataclasses, Fractions and tuples into JSON-ready values."""
    if isinstance(value, Fraction):
        return rational_text(value)
    if isinstance(value, Discriminant):
        return value.value
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


class ComponentRow(BaseModel):
    """One CSV/JSON row of the invariants table."""

    D: int
    spin: Optional[int] = None
    genus: Optional[int] = None
    e2: int
    e4: int = 0
    e5: int = 0
    cusps: Optional[int] = None
    chi_num: int
    chi_den: int
    flags: List[str] = Field(default_factory=list)

    @classmethod
    def from_invariants(cls, inv: ComponentInvariants) -> "ComponentRow":
        return cls(
            D=inv.D.value,
            spin=inv.spin,
            genus=inv.genus,
            e2=inv.e2,
            e4=inv.e4,
            e5=inv.e5,
            cusps=inv.cusps,
            chi_num=inv.chi.numerator,
            chi_den=inv.chi.denominator,
            flags=list(inv.flags),
        )

    def csv_cells(self) -> List[str]:
        cells = [self.D, self.spin, self.genus, self.e2, self.e4, self.e5, self.cusps]
        cells += [self.chi_num, self.chi_den, ";".join(self.flags)]
        return ["" if c is None else str(c) for c in cells]


CSV_HEADER = ["D", "spin", "genus", "e2", "e4", "e5", "cusps", "chi_num", "chi_den", "flags"]


class OutputRecord(BaseModel):
    """
    What every subcommand prints in JSON mode.

    Attributes:
        command: The subcommand name.
        params: The parsed arguments, echoed.
        result: The payload, already JSON-ready.
        elapsed_ms: Wall time; only set when timing was requested.
    """

    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    elapsed_ms: Optional[float] = None

    def to_json(self) -> str:
        exclude = {"elapsed_ms"} if self.elapsed_ms is None else set()
        return self.model_dump_json(exclude=exclude, indent=2)
