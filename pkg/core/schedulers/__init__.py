"""Scheduler implementations for discriminant sweeps."""

from core.schedulers.batch import BatchScheduler

__all__ = ["BatchScheduler"]
