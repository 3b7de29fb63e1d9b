"""Tests for the batch scheduler"""
import pytest

from core.errors import ConfigurationError
from core.models import SweepPlan, SweepTask, TaskStatus
from core.schedulers import BatchScheduler


def _plan(discriminants):
    tasks = [SweepTask(id=f"chi-{D}", action="chi", params={"D": D}) for D in discriminants]
    return SweepPlan(goal="chi", tasks=tasks)


class TestBatchScheduler:
    """Test BatchScheduler"""

    def test_batch_size(self):
        """Test batch size is workers times chunk"""
        assert BatchScheduler(max_parallel=3, chunk=4).batch_size == 12

    @pytest.mark.parametrize("kwargs", [{"max_parallel": 0}, {"chunk": 0}])
    def test_rejects_non_positive(self, kwargs):
        """Test invalid sizes raise"""
        with pytest.raises(ConfigurationError):
            BatchScheduler(**kwargs)

    def test_orders_by_discriminant(self):
        """Test pending tasks come out in ascending D"""
        plan = _plan([44, 5, 17, 8])
        batch = BatchScheduler(max_parallel=1, chunk=10).next_batch(plan)
        assert [t.params["D"] for t in batch] == [5, 8, 17, 44]

    def test_limits_batch(self):
        """Test at most batch_size tasks are returned"""
        plan = _plan([5, 8, 12, 13, 16])
        batch = BatchScheduler(max_parallel=2, chunk=1).next_batch(plan)
        assert [t.params["D"] for t in batch] == [5, 8]

    def test_skips_finished_tasks(self):
        """Test only pending tasks are scheduled"""
        plan = _plan([5, 8, 12])
        plan.tasks[0].status = TaskStatus.SUCCESS
        plan.tasks[1].status = TaskStatus.FAILED
        batch = BatchScheduler().next_batch(plan)
        assert [t.id for t in batch] == ["chi-12"]

    def test_exhausted_plan(self):
        """Test an empty batch once every task ran"""
        plan = _plan([5])
        plan.tasks[0].status = TaskStatus.SUCCESS
        assert BatchScheduler().next_batch(plan) == []
