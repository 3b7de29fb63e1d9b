"""
Auditors that write events to the ``weierstrass.audit`` logger or keep them in memory.
"""

import json
import logging
from typing import Any, Dict, List, Optional

from core.audit import Auditor

AUDIT_LOGGER = "weierstrass.audit"


def _default(value: Any) -> str:
    return str(value)


class LoggingAuditor(Auditor):
    """Emit each event as one JSON object per log line."""

    def __init__(self, logger: Optional[logging.Logger] = None, level: int = logging.INFO) -> None:
        self._logger = logger or logging.getLogger(AUDIT_LOGGER)
        self._level = level

    def record(self, event: Dict[str, Any]) -> None:
        self._logger.log(self._level, json.dumps(event, sort_keys=True, default=_default))


class MemoryAuditor(Auditor):
    def __init__(self) -> None:
        self.events: List[Dict[str, Any]] = []

    def record(self, event: Dict[str, Any]) -> None:
        self.events.append(dict(event))

    def events_of(self, name: str) -> List[Dict[str, Any]]:
        return [e for e in self.events if e.get("event") == name]

    def clear(self) -> None:
        self.events.clear()
