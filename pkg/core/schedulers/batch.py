from typing import List

from core.errors import ConfigurationError
from core.models import SweepPlan, SweepTask, TaskStatus
from core.scheduler import Scheduler


class BatchScheduler(Scheduler):
    """
    Hand out pending tasks in discriminant order.

    Sweep tasks are independent, so a batch is simply the next
    ``max_parallel * chunk`` pending tasks.
    """

    def __init__(self, max_parallel: int = 4, chunk: int = 8) -> None:
        if max_parallel < 1 or chunk < 1:
            raise ConfigurationError("max_parallel and chunk must be positive")
        self.max_parallel = max_parallel
        self.chunk = chunk

    @property
    def batch_size(self) -> int:
        return self.max_parallel * self.chunk

    def next_batch(self, plan: SweepPlan) -> List[SweepTask]:
        ready = [t for t in plan.tasks if t.status == TaskStatus.PENDING]
        ready.sort(key=lambda t: t.params.get("D", 0))
        return ready[: self.batch_size]
