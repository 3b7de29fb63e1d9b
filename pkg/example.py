"""
Complete example: a discriminant sweep with auditing.

This example shows the pieces the ``weierstrass table`` command wires together:
1. Settings come from the environment (WEIERSTRASS_JOBS, WEIERSTRASS_PRECISION)
2. The orchestrator plans one task per valid discriminant in a range
3. The batch scheduler hands out tasks in ascending D
4. The sweep executor runs them, in a process pool when jobs > 1
5. An auditor keeps every event

Scenario: list the genus of every component of W_D for 5 <= D <= 60, then
compute the polynomial f_16.
"""

from core.audits import MemoryAuditor
from core.config import Settings
from core.context import ExecutionContext
from core.executors import SweepExecutor
from core.models import TaskStatus
from core.modular.polynomial import fd_with_retry
from core.orchestrator import Orchestrator
from core.reference import load_reference_tables
from core.schedulers import BatchScheduler


def main() -> None:
    print("=" * 80)
    print("Weierstrass curves W_D, 5 <= D <= 60")
    print("=" * 80)

    settings = Settings.from_env()
    ctx = ExecutionContext.from_settings(settings, tables=load_reference_tables(), run="example")
    print(f"\nExecution Context: jobs={ctx.jobs}, precision={ctx.precision_bits} bits")

    auditor = MemoryAuditor()
    executor = SweepExecutor()
    orchestrator = Orchestrator(BatchScheduler(max_parallel=ctx.jobs), executor, auditor)

    plan = orchestrator.run(Orchestrator.plan_range("invariants", 5, 60), ctx)

    print(f"\nPlan Goal: {plan.goal}")
    print(f"Plan Status: {plan.status}")
    print("\nComponents:")
    for task in plan.tasks:
        if task.status != TaskStatus.SUCCESS:
            print(f"  D={task.params['D']}: {task.error_kind}: {task.error}")
            continue
        for comp in task.result:
            spin = "" if comp.spin is None else f" (spin {comp.spin})"
            flags = f" [{', '.join(comp.flags)}]" if comp.flags else ""
            print(
                f"  W_{comp.D.value}{spin}: g={comp.genus}, e2={comp.e2}, "
                f"C={comp.cusps}, chi={comp.chi}{flags}"
            )

    stats = executor.get_stats()
    print("\nExecution Statistics:")
    print(f"  Total Executions: {stats['total_executions']}")
    print(f"  Successful: {stats['successful_executions']}")
    print(f"  Failed: {stats['failed_executions']}")

    print(f"\nAudit Trail ({len(auditor.events)} events), last 3:")
    for i, event in enumerate(auditor.events[-3:], 1):
        print(f"  {i}. {event}")

    poly = fd_with_retry(16, settings)
    print(f"\nf_16 = {poly}")
    print(f"primitive form: {poly.primitive()}")


if __name__ == "__main__":
    main()
