"""
Executor module for running sweep tasks.

An executor maps a task's action (``"invariants"``, ``"prototypes"``, ...) to a
computation on one discriminant and stores the outcome on the task.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List

from core.context import ExecutionContext
from core.models import SweepTask


class Executor(ABC):
    """
    Abstract base class for task execution strategies.
    """

    @abstractmethod
    def execute(self, task: SweepTask, ctx: ExecutionContext) -> None:
        """
        Execute a single task in-process.

        Args:
            task: The task to execute. ``task.params`` holds the discriminant
                and any action options.
            ctx: The execution context (precision, jobs, reference tables).

        Sets:
            task.status, and task.result or task.error with task.error_kind.
        """
        pass

    @abstractmethod
    def execute_batch(self, tasks: List[SweepTask], ctx: ExecutionContext) -> List[Dict[str, Any]]:
        """
        Execute several independent tasks, possibly in parallel.

        Args:
            tasks: Tasks to execute.
            ctx: The execution context; ``ctx.jobs`` bounds the worker count.

        Returns:
            One summary dict per task, in the order of ``tasks``.
        """
        pass
