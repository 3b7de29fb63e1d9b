"""Auditor implementations."""

from core.audits.logging import LoggingAuditor, MemoryAuditor

__all__ = ["LoggingAuditor", "MemoryAuditor"]
