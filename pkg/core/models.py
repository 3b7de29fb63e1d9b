from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Discriminant:
    value: int
    conductor: int
    fundamental: int
    is_square: bool

    @property
    def is_split(self) -> bool:
        """W_D has two spin components."""
        return self.value > 9 and self.value % 8 == 1

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class QuadraticForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


@dataclass(frozen=True)
class PinwheelPrototype:
    e: int
    c: int
    b: int
    D: Discriminant

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.e, self.c, self.b)

    @property
    def tau_c(self) -> Tuple[int, int]:
        """(re, den) with tau_c = (re + sqrt(-D)) / den."""
        return (self.e, 2 * self.c)

    @property
    def tau_b(self) -> Tuple[int, int]:
        return (-self.e, 2 * self.b)


@dataclass(frozen=True)
class OrbifoldSignature:
    e2: int
    e4: int = 0
    e5: int = 0


@dataclass(frozen=True)
class PDComponent:
    e: int
    l: int  # noqa: E741
    m: int


@dataclass(frozen=True)
class Cusp:
    p: int
    q: int
    level: int

    def __str__(self) -> str:
        return "oo" if self.q == 0 else f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ChiRecord:
    chi_WD: Fraction
    chi_SD: Fraction
    chi_XD: Optional[Fraction] = None
    chi_PD: Optional[Fraction] = None
    components: Optional[Tuple[Fraction, Fraction]] = None


@dataclass(frozen=True)
class ComponentInvariants:
    D: Discriminant
    spin: Optional[int]
    genus: Optional[int]
    e2: int
    e4: int
    e5: int
    cusps: Optional[int]
    chi: Fraction
    flags: Tuple[str, ...] = ()

    @property
    def complete(self) -> bool:
        return self.genus is not None and self.cusps is not None


class TaskStatus(str, Enum):
    PENDING = "pending"
    RUNNING = "running"
    SUCCESS = "success"
    FAILED = "failed"


@dataclass
class SweepTask:
    id: str
    action: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: TaskStatus = TaskStatus.PENDING
    result: Optional[Any] = None
    error: Optional[str] = None
    error_kind: Optional[str] = None


@dataclass
class SweepPlan:
    goal: str
    tasks: List[SweepTask]
    status: str = "planned"


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: Any
    bound: Any
    holds: bool
    spin: Optional[int] = None


@dataclass
class BoundsReport:
    D: int
    checks: List[BoundCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> List[BoundCheck]:
        return [c for c in self.checks if not c.holds]


@dataclass(frozen=True)
class CellMismatch:
    table: str
    D: int
    spin: Optional[int]
    column: str
    expected: Any
    computed: Any


@dataclass
class VerifyReport:
    rows_checked: int = 0
    polynomials_checked: int = 0
    echoed_cells: int = 0
    mismatches: List[CellMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "OK" if self.ok else f"FAILED ({len(self.mismatches)} mismatched cells)"
        return f"{status}: {self.rows_checked} rows, {self.polynomials_checked} polynomials"
