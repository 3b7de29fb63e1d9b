"""Tests for the bundled reference tables"""
from fractions import Fraction

import pytest

from core.errors import ReferenceDataError
from core.modular.polynomial import RationalPoly
from core.reference import TABLE_B, TABLE_C, TableBRow, load_reference_tables


class TestLoadReferenceTables:
    """Test loading and validating Table B and Table C"""

    def test_bundled_counts(self, reference_tables):
        """Test the bundled tables load completely"""
        assert reference_tables.source == "bundled"
        assert len(reference_tables.table_b) == 142
        assert len(reference_tables.table_c) == 24

    def test_ref_only_rows_are_squares(self, reference_tables):
        """Test exactly the square rows carry the ref_only flag"""
        ref_only = [r for r in reference_tables.table_b if r.ref_only]
        assert len(ref_only) == 19
        assert all(int(r.D**0.5) ** 2 == r.D for r in ref_only)

    def test_rows_for_split(self, reference_tables):
        """Test split discriminants list spin 0 first"""
        rows = reference_tables.rows_for(17)
        assert [r.spin for r in rows] == [0, 1]
        assert rows[0].chi == Fraction(-3, 2)

    def test_rows_for_missing(self, reference_tables):
        """Test unlisted discriminants give no rows"""
        assert reference_tables.rows_for(229) == []
        assert not reference_tables.has(229)
        assert reference_tables.has(44)

    def test_polynomial_for(self, reference_tables):
        """Test f_D lookup and parsing"""
        row = reference_tables.polynomial_for(12)
        assert row.form == "primitive"
        assert row.poly().degree == 2
        assert reference_tables.polynomial_for(20) is None

    def test_quadratics_are_sigma_pairs(self, reference_tables):
        """Test a * sigma(a) = 12 - 2 (a + sigma(a)) for every quadratic f_D"""
        quadratics = [r for r in reference_tables.table_c if r.poly().degree == 2]
        assert [r.D for r in quadratics] == [5, 9, 12, 13, 16, 24, 25, 37, 40]
        for row in quadratics:
            c0, c1, _ = row.poly().monic().coeffs
            assert c0 == 12 + 2 * c1, row.D

    def test_d5_polynomial(self, reference_tables):
        """Test the D = 5 row has the roots 34 +- 16 sqrt(5)"""
        assert reference_tables.polynomial_for(5).poly().coeffs == (-124, -68, 1)

    def test_by_discriminant_sorted(self, reference_tables):
        """Test grouping follows ascending D"""
        grouped = reference_tables.by_discriminant()
        assert list(grouped) == sorted(grouped)
        assert len(grouped[121]) == 2

    def test_missing_directory(self, tmp_path):
        """Test a directory without the tables raises"""
        with pytest.raises(ReferenceDataError, match="not found"):
            load_reference_tables(tmp_path / "nowhere")

    def test_malformed_row(self, tmp_path):
        """Test a bad cell names the file and line"""
        (tmp_path / TABLE_B).write_text(
            "D,spin,genus,e2,e4,e5,cusps,chi_num,chi_den,flags\n"
            "5,,0,1,0,1,1,-3,10,\n"
            "8,,-1,0,1,0,2,-3,4,\n",
            encoding="utf-8",
        )
        (tmp_path / TABLE_C).write_text("D,polynomial,form\n8,t+6,radical\n", encoding="utf-8")
        with pytest.raises(ReferenceDataError, match="table_b.csv line 3"):
            load_reference_tables(tmp_path)

    def test_empty_table(self, tmp_path):
        """Test a header-only table is rejected"""
        (tmp_path / TABLE_B).write_text(
            "D,spin,genus,e2,e4,e5,cusps,chi_num,chi_den,flags\n", encoding="utf-8"
        )
        (tmp_path / TABLE_C).write_text("D,polynomial,form\n8,t+6,radical\n", encoding="utf-8")
        with pytest.raises(ReferenceDataError, match="no rows"):
            load_reference_tables(tmp_path)


class TestTableBRow:
    """Test row parsing"""

    def test_blank_spin_and_flags(self):
        """Test CSV blanks become None and an empty flag tuple"""
        row = TableBRow.model_validate(
            {"D": "44", "spin": "", "genus": "1", "e2": "3", "e4": "0", "e5": "0",
             "cusps": "9", "chi_num": "-21", "chi_den": "2", "flags": ""}
        )
        assert row.spin is None
        assert row.flags == ()
        assert row.chi == Fraction(-21, 2)
        assert not row.ref_only

    def test_flags_split_on_semicolon(self):
        """Test several flags in one cell"""
        row = TableBRow(
            D=36, genus=0, e2=0, cusps=8, chi_num=-6, chi_den=1, flags="ref_only;extra"
        )
        assert row.flags == ("ref_only", "extra")
        assert row.ref_only


class TestTableCRow:
    """Test selecting the tabulated form of a computed polynomial"""

    def test_radical_form(self, reference_tables):
        """Test the D = 8 row shows the squarefree part"""
        computed = RationalPoly.from_expression("(t+6)^2")
        assert reference_tables.polynomial_for(8).in_form(computed).to_text() == "t+6"

    def test_primitive_form(self, reference_tables):
        """Test the D = 16 row clears denominators"""
        computed = RationalPoly.from_expression("(2t^2+73t+170)/2")
        assert reference_tables.polynomial_for(16).in_form(computed).to_text() == "2t^2+73t+170"

    def test_factor_form(self, reference_tables):
        """Test the D = 76 row picks out its cubic factor"""
        row = reference_tables.polynomial_for(76)
        computed = RationalPoly.from_expression("(t^3+3t^2+3459t+6913)(t^3-t+5)")
        assert row.in_form(computed).to_text() == "t^3+3t^2+3459t+6913"
        assert row.in_form(RationalPoly.from_expression("t^3-t+5")) is None
