"""Pytest configuration and fixtures"""
import pytest

from core.audits import MemoryAuditor
from core.config import Settings
from core.context import ExecutionContext
from core.reference import load_reference_tables


@pytest.fixture
def settings():
    """Settings with a single worker and the default precision"""
    return Settings(precision_bits=256, max_precision_bits=1024, jobs=1)


@pytest.fixture(scope="session")
def reference_tables():
    """The bundled Table B and Table C"""
    return load_reference_tables()


@pytest.fixture
def execution_context(settings, reference_tables):
    """Create a test ExecutionContext"""
    return ExecutionContext(
        precision_bits=settings.precision_bits,
        jobs=1,
        trace_id="trace-test-123",
        tables=reference_tables,
        metadata={"test": "true"},
        max_precision_bits=settings.max_precision_bits,
    )


@pytest.fixture
def memory_auditor():
    """An auditor that keeps events in a list"""
    return MemoryAuditor()
