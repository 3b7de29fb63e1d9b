"""
Scheduler module for ordering discriminant sweeps.

Schedulers decide which pending tasks of a sweep plan run next and how many of
them are handed to the executor at once.
"""

from abc import ABC, abstractmethod
from typing import List

from core.models import SweepPlan, SweepTask


class Scheduler(ABC):
    """
    Abstract base class for sweep scheduling strategies.
    """

    @abstractmethod
    def next_batch(self, plan: SweepPlan) -> List[SweepTask]:
        """
        Get the next batch of tasks to execute from the plan.

        Args:
            plan: A SweepPlan whose tasks are still partly pending.

        Returns:
            The next tasks to execute, in plan order. An empty list means the
            plan is exhausted.
        """
