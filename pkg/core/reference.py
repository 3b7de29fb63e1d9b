"""
Bundled reference tables.

``table_b.csv`` lists the homeomorphism type of W_D per component (one row, or
two rows with spin 0 and 1 when W_D is split). ``table_c.csv`` lists the
polynomials f_D. Square-discriminant rows carry the ``ref_only`` flag: their
genus and cusp cells are echoed rather than recomputed.
"""

import csv
import logging
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator

from core.errors import ReferenceDataError
from core.modular.polynomial import RationalPoly

logger = logging.getLogger(__name__)

TABLE_B = "table_b.csv"
TABLE_C = "table_c.csv"
REF_ONLY = "ref_only"


class TableBRow(BaseModel):
    D: int = Field(ge=5)
    spin: Optional[int] = Field(default=None, ge=0, le=1)
    genus: int = Field(ge=0)
    e2: int = Field(ge=0)
    e4: int = Field(default=0, ge=0)
    e5: int = Field(default=0, ge=0)
    cusps: int = Field(ge=1)
    chi_num: int
    chi_den: int = Field(ge=1)
    flags: Tuple[str, ...] = ()

    @field_validator("spin", mode="before")
    @classmethod
    def _blank_spin(cls, v):
        return None if v in ("", None) else v

    @field_validator("flags", mode="before")
    @classmethod
    def _split_flags(cls, v):
        if isinstance(v, str):
            return tuple(f for f in v.split(";") if f)
        return v or ()

    @property
    def chi(self) -> Fraction:
        return Fraction(self.chi_num, self.chi_den)

    @property
    def ref_only(self) -> bool:
        return REF_ONLY in self.flags


class TableCRow(BaseModel):
    D: int = Field(ge=5)
    polynomial: str
    form: Literal["primitive", "radical", "factor"] = "primitive"

    def poly(self) -> RationalPoly:
        return RationalPoly.from_expression(self.polynomial)

    def in_form(self, computed: RationalPoly) -> Optional[RationalPoly]:
        """
        The computed f_D in this row's form: its primitive form, its radical, or
        the irreducible factor this row lists (None if it is not a factor).
        """
        if self.form == "primitive":
            return computed.primitive()
        if self.form == "radical":
            return computed.radical()
        target = self.poly().primitive()
        return next((f for f, _ in computed.factors() if f == target), None)


class ReferenceTables(BaseModel):
    table_b: List[TableBRow]
    table_c: List[TableCRow]
    source: str = "bundled"

    def rows_for(self, D: int) -> List[TableBRow]:
        """Table B rows for D, spin 0 first; empty if D is not listed."""
        return sorted(
            (r for r in self.table_b if r.D == D), key=lambda r: -1 if r.spin is None else r.spin
        )

    def has(self, D: int) -> bool:
        return any(r.D == D for r in self.table_b)

    def polynomial_for(self, D: int) -> Optional[TableCRow]:
        return next((r for r in self.table_c if r.D == D), None)

    def discriminants(self) -> List[int]:
        return sorted({r.D for r in self.table_b})

    def by_discriminant(self) -> Dict[int, List[TableBRow]]:
        return {D: self.rows_for(D) for D in self.discriminants()}


def _read_rows(text: str, model, name: str) -> list:
    rows = []
    reader = csv.DictReader(text.splitlines())
    for lineno, raw in enumerate(reader, start=2):
        try:
            rows.append(model.model_validate(raw))
        except ValidationError as e:
            raise ReferenceDataError(f"{name} line {lineno}: {e}") from e
    if not rows:
        raise ReferenceDataError(f"{name} has no rows")
    return rows


def _read_text(directory: Optional[Path], name: str) -> str:
    try:
        if directory is None:
            return resources.files("core.data").joinpath(name).read_text(encoding="utf-8")
        return (Path(directory) / name).read_text(encoding="utf-8")
    except (FileNotFoundError, NotADirectoryError) as e:
        where = "package data" if directory is None else str(directory)
        raise ReferenceDataError(f"reference table {name} not found in {where}") from e


@lru_cache(maxsize=8)
def load_reference_tables(directory: Optional[Path] = None) -> ReferenceTables:
    """
    Load and validate Table B and Table C.

    Args:
        directory: Directory holding table_b.csv and table_c.csv; None for the
            bundled copies.

    Returns:
        Validated tables.

    Raises:
        ReferenceDataError: If a file is missing or a row is malformed.
    """
    table_b = _read_rows(_read_text(directory, TABLE_B), TableBRow, TABLE_B)
    table_c = _read_rows(_read_text(directory, TABLE_C), TableCRow, TABLE_C)
    source = "bundled" if directory is None else str(directory)
    logger.debug(
        "loaded %d Table B rows and %d Table C rows from %s", len(table_b), len(table_c), source
    )
    return ReferenceTables(table_b=table_b, table_c=table_c, source=source)
