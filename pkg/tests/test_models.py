"""Tests for data models"""
from fractions import Fraction

import pytest

from core.arith import as_discriminant
from core.models import (
    BoundCheck,
    BoundsReport,
    CellMismatch,
    ComponentInvariants,
    Cusp,
    PinwheelPrototype,
    QuadraticForm,
    SweepPlan,
    SweepTask,
    TaskStatus,
    VerifyReport,
)


class TestTaskStatus:
    """Test TaskStatus enum"""

    def test_task_status_values(self):
        """Test TaskStatus enum values"""
        assert TaskStatus.PENDING.value == "pending"
        assert TaskStatus.RUNNING.value == "running"
        assert TaskStatus.SUCCESS.value == "success"
        assert TaskStatus.FAILED.value == "failed"

    def test_task_status_is_string_enum(self):
        """Test that TaskStatus compares equal to its string value"""
        assert TaskStatus.SUCCESS == "success"


class TestSweepTask:
    """Test SweepTask model"""

    def test_task_creation(self):
        """Test creating a task with defaults"""
        task = SweepTask(id="invariants-17", action="invariants", params={"D": 17})
        assert task.status == TaskStatus.PENDING
        assert task.result is None
        assert task.error is None
        assert task.error_kind is None

    def test_task_empty_params(self):
        """Test that default params are not shared"""
        t1 = SweepTask(id="a", action="chi")
        t2 = SweepTask(id="b", action="chi")
        t1.params["D"] = 5
        assert t2.params == {}

    def test_plan_creation(self):
        """Test creating a plan"""
        plan = SweepPlan(goal="chi 5..8", tasks=[SweepTask(id="chi-5", action="chi")])
        assert plan.status == "planned"
        assert len(plan.tasks) == 1


class TestDiscriminantModel:
    """Test Discriminant properties"""

    @pytest.mark.parametrize(
        "D,split", [(9, False), (17, True), (25, True), (41, True), (44, False)]
    )
    def test_is_split(self, D, split):
        """Test that only D > 9 with D ≡ 1 mod 8 split"""
        assert as_discriminant(D).is_split is split

    def test_int_conversion(self):
        """Test int() of a discriminant"""
        assert int(as_discriminant(45)) == 45


class TestGeometryModels:
    """Test the small value types"""

    def test_quadratic_form_disc(self):
        """Test b^2 - 4ac"""
        assert QuadraticForm(2, 2, 3).disc == -20

    def test_prototype_taus(self):
        """Test the exact (re, den) pairs of the two evaluation points"""
        p = PinwheelPrototype(-1, 3, 3, as_discriminant(17))
        assert p.key == (-1, 3, 3)
        assert p.tau_c == (-1, 6)
        assert p.tau_b == (1, 6)

    def test_cusp_str(self):
        """Test cusp rendering"""
        assert str(Cusp(1, 0, 6)) == "oo"
        assert str(Cusp(1, 2, 6)) == "1/2"

    def test_component_complete(self):
        """Test the complete flag"""
        disc = as_discriminant(36)
        inv = ComponentInvariants(disc, None, None, 0, 0, 0, None, Fraction(-6), ("unavailable",))
        assert not inv.complete


class TestReports:
    """Test bounds and verification reports"""

    def test_bounds_report_failures(self):
        """Test that failing checks are collected"""
        report = BoundsReport(D=44)
        report.checks.append(BoundCheck("a", 1, 2, True))
        report.checks.append(BoundCheck("b", 3, 2, False))
        assert not report.ok
        assert [c.name for c in report.failures] == ["b"]

    def test_verify_summary_ok(self):
        """Test the success summary"""
        report = VerifyReport(rows_checked=142, polynomials_checked=24)
        assert report.ok
        assert report.summary() == "OK: 142 rows, 24 polynomials"

    def test_verify_summary_failed(self):
        """Test the failure summary"""
        report = VerifyReport(rows_checked=3)
        report.mismatches.append(CellMismatch("B", 44, None, "genus", 1, 2))
        assert report.summary() == "FAILED (1 mismatched cells): 3 rows, 0 polynomials"
