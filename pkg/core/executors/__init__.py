"""Executor implementations for sweep tasks."""

from core.executors.sweep import DEFAULT_HANDLERS, SweepExecutor

__all__ = ["DEFAULT_HANDLERS", "SweepExecutor"]
