"""
Runtime settings.

Defaults can be overridden from the environment:

    WEIERSTRASS_PRECISION   working precision in bits for f_D evaluation
    WEIERSTRASS_JOBS        worker processes for discriminant sweeps
    WEIERSTRASS_TABLES      directory holding table_b.csv and table_c.csv
"""

import os
from pathlib import Path
from typing import Mapping, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from core.errors import ConfigurationError

ENV_PRECISION = "WEIERSTRASS_PRECISION"
ENV_JOBS = "WEIERSTRASS_JOBS"
ENV_TABLES = "WEIERSTRASS_TABLES"


def default_jobs() -> int:
    return os.cpu_count() or 1


class Settings(BaseModel):
    precision_bits: int = Field(default=256, ge=64, description="Working precision for f_D")
    max_precision_bits: int = Field(default=4096, ge=64, description="Retry ceiling for f_D")
    jobs: int = Field(default_factory=default_jobs, ge=1, description="Sweep worker processes")
    tables_dir: Optional[Path] = Field(default=None, description="Reference table override")

    @model_validator(mode="after")
    def _ceiling_above_precision(self) -> "Settings":
        if self.max_precision_bits < self.precision_bits:
            raise ValueError(
                f"max_precision_bits ({self.max_precision_bits}) is below "
                f"precision_bits ({self.precision_bits})"
            )
        return self

    @classmethod
    def build(cls, **values) -> "Settings":
        """
        Validate explicit values, dropping the ones left as None.

        Raises:
            ConfigurationError: If validation fails.
        """
        try:
            return cls(**{k: v for k, v in values.items() if v is not None})
        except ValidationError as e:
            raise ConfigurationError(f"invalid settings: {e}") from e

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides) -> "Settings":
        """
        Read settings from the environment; explicit overrides win.

        Raises:
            ConfigurationError: If a variable is malformed.
        """
        environ = os.environ if environ is None else environ
        values = {}
        for name, key in ((ENV_PRECISION, "precision_bits"), (ENV_JOBS, "jobs")):
            raw = environ.get(name)
            if raw is None or raw == "":
                continue
            try:
                values[key] = int(raw)
            except ValueError as e:
                raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from e
        if environ.get(ENV_TABLES):
            values["tables_dir"] = Path(environ[ENV_TABLES])
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.build(**values)
