"""Tests for ExecutionContext"""
from core.config import Settings
from core.context import ExecutionContext


class TestExecutionContext:
    """Test ExecutionContext"""

    def test_context_creation(self):
        """Test basic context creation"""
        ctx = ExecutionContext(precision_bits=256, jobs=2, trace_id="trace-123")
        assert ctx.precision_bits == 256
        assert ctx.jobs == 2
        assert ctx.tables is None
        assert ctx.metadata == {}

    def test_context_isolation(self):
        """Test that different contexts do not share metadata"""
        ctx1 = ExecutionContext(precision_bits=256, jobs=1, trace_id="t1")
        ctx2 = ExecutionContext(precision_bits=256, jobs=1, trace_id="t2")
        ctx1.metadata["key"] = "value1"
        assert "key" not in ctx2.metadata

    def test_from_settings(self, reference_tables):
        """Test building a context from settings"""
        settings = Settings(precision_bits=512, max_precision_bits=2048, jobs=3)
        ctx = ExecutionContext.from_settings(settings, tables=reference_tables, run="nightly")

        assert ctx.precision_bits == 512
        assert ctx.max_precision_bits == 2048
        assert ctx.jobs == 3
        assert ctx.tables is reference_tables
        assert ctx.metadata == {"run": "nightly"}
        assert ctx.trace_id.startswith("trace-")

    def test_trace_ids_are_unique(self):
        """Test that each context gets its own trace id"""
        settings = Settings(jobs=1)
        ids = {ExecutionContext.from_settings(settings).trace_id for _ in range(5)}
        assert len(ids) == 5

    def test_settings_round_trip(self, execution_context):
        """Test that the settings view carries the precision limits"""
        settings = execution_context.settings
        assert settings.precision_bits == execution_context.precision_bits
        assert settings.max_precision_bits == execution_context.max_precision_bits
        assert settings.jobs == 1
