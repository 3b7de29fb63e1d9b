from abc import ABC, abstractmethod
from typing import Any, Dict


class Auditor(ABC):
    @abstractmethod
    def record(self, event: Dict[str, Any]) -> None:
        """
        Record one sweep or verification event.

        Every event carries an ``event`` key naming it, e.g. ``sweep_planned``,
        ``task_failed`` or ``cell_mismatch``.
        """
        pass
