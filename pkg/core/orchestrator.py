"""
Orchestrator module for coordinating discriminant sweeps.

The orchestrator drives a sweep plan through the scheduler and executor and
records every step with the auditor.

Architecture:
    1. plan_range: One task per valid discriminant in an inclusive range
    2. Scheduler: Determines which pending tasks run next
    3. Executor: Runs each batch, possibly in a process pool
    4. Auditor: Records planning, batches, task outcomes and completion
"""

import logging
from typing import Any, Dict, List, Optional

from core.arith import valid_discriminants
from core.audit import Auditor
from core.context import ExecutionContext
from core.errors import DomainError
from core.executor import Executor
from core.models import SweepPlan, SweepTask, TaskStatus
from core.scheduler import Scheduler

logger = logging.getLogger(__name__)


class Orchestrator:
    """
    Central coordinator for per-discriminant sweeps.

    Tasks are independent, so a failed task never stops the sweep; it is
    marked FAILED, audited, and the remaining batches still run.
    """

    def __init__(self, scheduler: Scheduler, executor: Executor, auditor: Auditor):
        """
        Initialize the orchestrator.

        Args:
            scheduler: Chooses the next batch of pending tasks.
            executor: Runs batches of tasks.
            auditor: Records sweep events.
        """
        self.scheduler = scheduler
        self.executor = executor
        self.auditor = auditor

    @staticmethod
    def plan_range(
        action: str, start: int, stop: int, params: Optional[Dict[str, Any]] = None
    ) -> SweepPlan:
        """
        Build a plan with one task per valid discriminant in [start, stop].

        Raises:
            DomainError: If start > stop.
        """
        if start > stop:
            raise DomainError(f"empty discriminant range {start}..{stop}")
        tasks = [
            SweepTask(id=f"{action}-{D}", action=action, params={**(params or {}), "D": D})
            for D in valid_discriminants(start, stop)
        ]
        return SweepPlan(goal=f"{action} {start}..{stop}", tasks=tasks)

    def run(self, plan: SweepPlan, ctx: ExecutionContext) -> SweepPlan:
        """
        Execute every task of the plan.

        Args:
            plan: The sweep plan; tasks are updated in place.
            ctx: The execution context.

        Returns:
            The plan, with status "completed" or "completed_with_failures".
        """
        self.auditor.record(
            {
                "event": "sweep_planned",
                "plan": plan.goal,
                "task_count": len(plan.tasks),
                "trace_id": ctx.trace_id,
            }
        )
        plan.status = "running"

        while True:
            batch = self.scheduler.next_batch(plan)
            if not batch:
                break
            self.auditor.record(
                {"event": "batch_scheduled", "tasks": [t.id for t in batch], "size": len(batch)}
            )
            self._run_batch(batch, ctx)

        failed = self.failed_tasks(plan)
        plan.status = "completed_with_failures" if failed else "completed"
        self.auditor.record(
            {
                "event": "sweep_completed",
                "plan": plan.goal,
                "status": plan.status,
                "failed": len(failed),
            }
        )
        return plan

    def _run_batch(self, batch: List[SweepTask], ctx: ExecutionContext) -> None:
        try:
            self.executor.execute_batch(batch, ctx)
        except Exception as e:
            # a broken pool leaves the whole batch unfinished
            logger.error("batch execution failed: %s", e)
            for task in batch:
                if task.status in (TaskStatus.PENDING, TaskStatus.RUNNING):
                    task.status = TaskStatus.FAILED
                    task.error = str(e)
                    task.error_kind = type(e).__name__

        for task in batch:
            if task.status == TaskStatus.SUCCESS:
                self.auditor.record(
                    {"event": "task_completed", "task": task.id, "action": task.action}
                )
            else:
                if task.status != TaskStatus.FAILED:
                    task.status = TaskStatus.FAILED
                    task.error = task.error or "task was not executed"
                self.auditor.record(
                    {
                        "event": "task_failed",
                        "task": task.id,
                        "action": task.action,
                        "error": task.error,
                        "error_kind": task.error_kind,
                    }
                )

    @staticmethod
    def failed_tasks(plan: SweepPlan) -> List[SweepTask]:
        return [t for t in plan.tasks if t.status == TaskStatus.FAILED]
