import uuid
from dataclasses import dataclass, field
from typing import Dict, Optional

from core.config import Settings


@dataclass
class ExecutionContext:
    precision_bits: int
    jobs: int
    trace_id: str
    tables: Optional[object] = None
    metadata: Dict[str, str] = field(default_factory=dict)
    max_precision_bits: int = 4096

    @classmethod
    def from_settings(cls, settings: Settings, tables=None, **metadata: str) -> "ExecutionContext":
        return cls(
            precision_bits=settings.precision_bits,
            jobs=settings.jobs,
            trace_id=f"trace-{uuid.uuid4().hex[:12]}",
            tables=tables,
            metadata=dict(metadata),
            max_precision_bits=settings.max_precision_bits,
        )

    @property
    def settings(self) -> Settings:
        return Settings(
            precision_bits=self.precision_bits,
            max_precision_bits=self.max_precision_bits,
            jobs=self.jobs,
        )
