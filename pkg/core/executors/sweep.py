"""
Sweep executor: runs one computation per discriminant.

Handlers are registered per action and called as ``handler(params, ctx)``,
where ``params["D"]`` is the discriminant. With ``ctx.jobs > 1`` a batch is
spread over a process pool, so handlers used in parallel sweeps must be
module-level functions.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Tuple

from core.context import ExecutionContext
from core.cusps import (
    cusp_count_pd,
    cusp_count_wd,
    cusp_split,
    fricke_orbits,
    pd_components,
    y0_cusp_count,
)
from core.errors import NotApplicableError
from core.eulerchar import chi_record
from core.executor import Executor
from core.models import SweepTask, TaskStatus
from core.modular.polynomial import fd_with_retry
from core.prototypes import enumerate_prototypes, enumerate_prototypes_all, spin_of_prototype
from core.topology import check_bounds, compute_invariants

logger = logging.getLogger(__name__)

Handler = Callable[[Dict[str, Any], ExecutionContext], Any]


def invariants_handler(params: Dict[str, Any], ctx: ExecutionContext):
    return compute_invariants(params["D"], ctx.tables)


def prototypes_handler(params: Dict[str, Any], ctx: ExecutionContext):
    D = params["D"]
    found = enumerate_prototypes_all(D) if params.get("all") else enumerate_prototypes(D)
    rows = []
    for p in found:
        row = {"e": p.e, "c": p.c, "b": p.b}
        if p.D.is_split:
            row["spin"] = spin_of_prototype(p)
        rows.append(row)
    return rows


def chi_handler(params: Dict[str, Any], ctx: ExecutionContext):
    return chi_record(params["D"])


def cusps_handler(params: Dict[str, Any], ctx: ExecutionContext):
    """P_D components with their cusp counts, and C(W_D) where it is computable."""
    D = params["D"]
    components = []
    for comp in pd_components(D):
        count = fricke_orbits(comp.m) if comp.e == 0 else y0_cusp_count(comp.m)
        components.append({"e": comp.e, "l": comp.l, "m": comp.m, "cusps": count})
    result: Dict[str, Any] = {"components": components, "cusps_PD": cusp_count_pd(D)}
    try:
        result["cusps_WD"] = cusp_count_wd(D)
        result["split"] = list(cusp_split(D))
    except NotApplicableError as e:
        logger.debug("cusps for D=%s: %s", D, e)
    return result


def fd_handler(params: Dict[str, Any], ctx: ExecutionContext):
    return fd_with_retry(params["D"], ctx.settings)


def bounds_handler(params: Dict[str, Any], ctx: ExecutionContext):
    return check_bounds(params["D"], ctx.tables)


DEFAULT_HANDLERS: Dict[str, Handler] = {
    "invariants": invariants_handler,
    "prototypes": prototypes_handler,
    "chi": chi_handler,
    "cusps": cusps_handler,
    "bounds": bounds_handler,
    "fd": fd_handler,
}


def _invoke(
    handler: Handler, params: Dict[str, Any], ctx: ExecutionContext
) -> Tuple[bool, Any, str]:
    """Run a handler; returns (ok, result or message, exception class name)."""
    try:
        return True, handler(params, ctx), ""
    except Exception as e:
        return False, str(e), type(e).__name__


class SweepExecutor(Executor):
    """
    Executor with a handler registry keyed by action.

    Keeps execution statistics and history the same way for in-process and
    pooled runs.
    """

    def __init__(self, handlers: Optional[Dict[str, Handler]] = None) -> None:
        self._handlers: Dict[str, Handler] = dict(
            DEFAULT_HANDLERS if handlers is None else handlers
        )
        self._execution_history: List[Dict[str, Any]] = []
        self._stats: Dict[str, int] = {
            "total_executions": 0,
            "successful_executions": 0,
            "failed_executions": 0,
        }

    def register(self, action: str, handler: Handler) -> None:
        """
        Register a handler for an action.

        Args:
            action: The action name (e.g. ``"invariants"``).
            handler: Called as ``handler(params, ctx)``.
        """
        self._handlers[action] = handler

    def unregister(self, action: str) -> None:
        self._handlers.pop(action, None)

    def has_handler(self, action: str) -> bool:
        return action in self._handlers

    def execute(self, task: SweepTask, ctx: ExecutionContext) -> None:
        """
        Execute a task in-process.

        Sets:
            task.status: SUCCESS or FAILED.
            task.result: Handler output on success.
            task.error, task.error_kind: Message and exception class name on failure.
        """
        if task.action not in self._handlers:
            self._finish(task, False, f"No handler for {task.action}", "NotApplicableError")
            return
        task.status = TaskStatus.RUNNING
        self._finish(task, *_invoke(self._handlers[task.action], task.params, ctx))

    def execute_batch(self, tasks: List[SweepTask], ctx: ExecutionContext) -> List[Dict[str, Any]]:
        """
        Execute independent tasks, in a process pool when ``ctx.jobs > 1``.

        Returns:
            List of result dicts with keys task_id, action, status, and result
            or error, in the order of ``tasks``.
        """
        if ctx.jobs > 1 and len(tasks) > 1:
            self._execute_pooled(tasks, ctx)
        else:
            for task in tasks:
                self.execute(task, ctx)

        results = []
        for task in tasks:
            result_dict = {"task_id": task.id, "action": task.action, "status": task.status.value}
            if task.status == TaskStatus.SUCCESS:
                result_dict["result"] = task.result
            if task.error:
                result_dict["error"] = task.error
            results.append(result_dict)
        return results

    def _execute_pooled(self, tasks: List[SweepTask], ctx: ExecutionContext) -> None:
        runnable = []
        for task in tasks:
            if task.action in self._handlers:
                task.status = TaskStatus.RUNNING
                runnable.append(task)
            else:
                self._finish(task, False, f"No handler for {task.action}", "NotApplicableError")
        workers = min(ctx.jobs, len(runnable)) or 1
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                task.id: pool.submit(_invoke, self._handlers[task.action], task.params, ctx)
                for task in runnable
            }
            by_id = {task.id: task for task in runnable}
            for task_id, future in futures.items():
                self._finish(by_id[task_id], *future.result())

    def _finish(self, task: SweepTask, ok: bool, payload: Any, error_kind: str) -> None:
        self._stats["total_executions"] += 1
        if ok:
            task.status = TaskStatus.SUCCESS
            task.result = payload
            self._stats["successful_executions"] += 1
        else:
            task.status = TaskStatus.FAILED
            task.error = payload
            task.error_kind = error_kind
            self._stats["failed_executions"] += 1
            logger.debug("task %s failed: %s: %s", task.id, error_kind, payload)
        self._execution_history.append(
            {"task_id": task.id, "action": task.action, "status": task.status.value}
        )

    def get_execution_history(self) -> List[Dict[str, Any]]:
        return self._execution_history.copy()

    def clear_execution_history(self) -> None:
        self._execution_history.clear()

    def get_stats(self) -> Dict[str, int]:
        """
        Get executor statistics.

        Returns:
            Dict with keys: total_executions, successful_executions, failed_executions.
        """
        return self._stats.copy()
