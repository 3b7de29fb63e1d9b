"""
Homeomorphism type of W_D.

The genus is never computed directly: it is solved from the orbifold Euler
characteristic relation

    chi = 2 - 2g - C - e2/2 - (3/4) e4 - (4/5) e5

with chi, e_n and C computed independently. Integrality of the solved genus is
the end-to-end check tying the other modules together.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.arith import as_discriminant, valid_discriminants
from core.audit import Auditor
from core.config import Settings
from core.cusps import (
    count_pd_components,
    cusp_count_pd,
    cusp_count_wd,
    cusp_split,
    one_cylinder_count,
    two_cyl_spin_difference,
)
from core.errors import ConsistencyError, DomainError, NotApplicableError
from core.eulerchar import chi_record, chi_XD
from core.models import (
    BoundCheck,
    BoundsReport,
    CellMismatch,
    ComponentInvariants,
    Discriminant,
    VerifyReport,
)
from core.modular.polynomial import fd_with_retry
from core.prototypes import e2_by_spin, orbifold_signature
from core.reference import REF_ONLY, ReferenceTables, TableBRow, load_reference_tables

logger = logging.getLogger(__name__)

UNAVAILABLE = "unavailable"


def solve_genus(C: int, e2: int, e4: int, e5: int, chi: Fraction) -> int:
    """
    Genus from the Euler characteristic relation.

    Raises:
        ConsistencyError: If 2g is not a non-negative even integer.
    """
    two_g = 2 - C - Fraction(e2, 2) - Fraction(3 * e4, 4) - Fraction(4 * e5, 5) - chi
    if two_g.denominator != 1 or two_g.numerator % 2 or two_g < 0:
        raise ConsistencyError(
            f"2g = {two_g} from chi={chi}, C={C}, e2={e2}, e4={e4}, e5={e5} "
            "is not a non-negative even integer"
        )
    return two_g.numerator // 2


def _reference_row(rows: Sequence[TableBRow], spin: Optional[int]) -> Optional[TableBRow]:
    return next((r for r in rows if r.spin == spin), None)


def compute_invariants(D, reference: Optional[ReferenceTables] = None) -> List[ComponentInvariants]:
    """
    Per-component invariants of W_D.

    Args:
        D: Discriminant.
        reference: Tables supplying genus and cusps for square D. Without them
            those cells are left as None and flagged ``unavailable``.

    Returns:
        One record (spin None), or two (spin 0 then 1) when D > 9, D ≡ 1 (mod 8).

    Raises:
        ConsistencyError: If the solved genus is not a non-negative integer, or
            reference genus and cusps break the Euler characteristic relation.
    """
    disc = as_discriminant(D)
    sig = orbifold_signature(disc)
    chi = chi_record(disc)
    if disc.is_split:
        e2s = e2_by_spin(disc)
        cusps = (None, None) if disc.is_square else cusp_split(disc)
        parts = [(spin, e2s[spin], 0, 0, cusps[spin], chi.components[spin]) for spin in (0, 1)]
    else:
        cusps = None if disc.is_square else cusp_count_wd(disc)
        parts = [(None, sig.e2, sig.e4, sig.e5, cusps, chi.chi_WD)]

    rows = reference.rows_for(disc.value) if reference is not None and disc.is_square else []
    records = []
    for spin, e2, e4, e5, C, x in parts:
        flags: Tuple[str, ...] = ()
        genus = None
        if C is not None:
            genus = solve_genus(C, e2, e4, e5, x)
        else:
            row = _reference_row(rows, spin)
            if row is not None:
                C, genus, flags = row.cusps, row.genus, (REF_ONLY,)
                if solve_genus(C, e2, e4, e5, x) != genus:
                    raise ConsistencyError(
                        f"reference genus {genus} and cusps {C} of W_{disc.value} "
                        f"(spin {spin}) do not fit chi = {x}"
                    )
            else:
                flags = (UNAVAILABLE,)
        records.append(
            ComponentInvariants(
                D=disc, spin=spin, genus=genus, e2=e2, e4=e4, e5=e5, cusps=C, chi=x, flags=flags
            )
        )
    logger.debug("invariants for D=%d: %s", disc.value, records)
    return records


def effective_genus_lower_bound(D) -> float:
    """
    Lower bound for the genus of every component of W_D.

    D^(3/2)/600 - D/16 - D^(3/4)/2 - 75 for non-square D, and
    D^(3/2)/240 - 7D/10 - D^(3/4)/2 - 75 for square D.
    """
    disc = as_discriminant(D)
    d = float(disc.value)
    if disc.is_square:
        return d**1.5 / 240 - 7 * d / 10 - d**0.75 / 2 - 75
    return d**1.5 / 600 - d / 16 - d**0.75 / 2 - 75


def square_genus_lower_bound(D) -> List[int]:
    """
    Genus lower bounds per component of W_D for square D = f^2.

    Uses C(W) <= C1 + C2 with C1 the one-cylinder count and C2 at most the cusp
    count of P_D; for odd f a spin component has C2 <= (C(P_D) + the spin
    difference sum) / 2.

    Raises:
        NotApplicableError: If D is not a square.
    """
    disc = as_discriminant(D)
    if not disc.is_square:
        raise NotApplicableError(f"D = {disc.value} is not a square")
    f = disc.conductor
    chi = chi_record(disc)
    c_pd = cusp_count_pd(disc)
    c1 = one_cylinder_count(f)
    if disc.is_split:
        diff = two_cyl_spin_difference(f)
        cusp_bound = (c_pd + diff) // 2 + c1
        parts = list(zip(e2_by_spin(disc), chi.components))
    else:
        cusp_bound = c_pd + c1
        sig = orbifold_signature(disc)
        parts = [(sig.e2, chi.chi_WD)]
    bounds = []
    for e2, x in parts:
        two_g = 2 - cusp_bound - Fraction(e2, 2) - x
        bounds.append(max(0, math.ceil(two_g / 2)))
    return bounds


def _component_genera(disc: Discriminant, reference: ReferenceTables, g_max: int):
    """(spin, genus) pairs, or None when every component is provably above g_max."""
    if not disc.is_square or reference.has(disc.value):
        return [(c.spin, c.genus) for c in compute_invariants(disc, reference)]
    bounds = square_genus_lower_bound(disc)
    if all(b > g_max for b in bounds):
        return None
    raise NotApplicableError(
        f"genus of W_{disc.value} cannot be decided without reference data (lower bounds {bounds})"
    )


def low_genus_components(
    D_max: int,
    g_max: int = 4,
    reference: Optional[ReferenceTables] = None,
    squares: bool = True,
) -> List[Tuple[int, Optional[int], int]]:
    """
    Every component of W_D, D <= D_max, with genus at most g_max.

    Discriminants whose effective lower bound exceeds g_max are skipped.

    Returns:
        (D, spin, genus) triples in ascending D.

    Raises:
        NotApplicableError: If a square D has no reference row and its lower
            bounds do not exclude it.
    """
    reference = reference or load_reference_tables()
    found = []
    for value in valid_discriminants(5, D_max):
        disc = as_discriminant(value)
        if disc.is_square and not squares:
            continue
        if effective_genus_lower_bound(disc) > g_max:
            continue
        genera = _component_genera(disc, reference, g_max)
        if genera is None:
            continue
        found.extend((value, spin, g) for spin, g in genera if g is not None and g <= g_max)
    return found


def genus_zero_components(
    D_max: int, reference: Optional[ReferenceTables] = None
) -> List[Tuple[int, Optional[int]]]:
    """
    All genus zero components of W_D for D <= D_max.

    Raises:
        DomainError: If D_max < 121.
    """
    if D_max < 121:
        raise DomainError(f"the genus zero search needs D_max >= 121, got {D_max}")
    return [(D, spin) for D, spin, _ in low_genus_components(D_max, 0, reference)]


def check_bounds(D, reference: Optional[ReferenceTables] = None) -> BoundsReport:
    """
    Evaluate every applicable inequality for D; failures are reported, not raised.

    Checks e2 <= D/2 (D > 8), h0(P_D) <= D^(3/4) + 150, |chi(X_D)| > D^(3/2)/300
    for non-square D, and the effective genus lower bound for each component
    whose genus is known.
    """
    disc = as_discriminant(D)
    value = disc.value
    report = BoundsReport(D=value)
    if value > 8:
        e2 = orbifold_signature(disc).e2
        report.checks.append(BoundCheck("e2 <= D/2", e2, Fraction(value, 2), e2 <= value / 2))
    h0_bound = value**0.75 + 150
    try:
        h0 = count_pd_components(disc)
    except ConsistencyError:
        h0 = None
    report.checks.append(BoundCheck("h0(P_D) <= D^(3/4)+150", h0, h0_bound, h0 is not None))
    if not disc.is_square:
        chi_x = abs(chi_XD(disc))
        bound = value**1.5 / 300
        report.checks.append(BoundCheck("|chi(X_D)| > D^(3/2)/300", chi_x, bound, chi_x > bound))
    lower = effective_genus_lower_bound(disc)
    square_bounds = square_genus_lower_bound(disc) if disc.is_square else None
    for i, comp in enumerate(compute_invariants(disc, reference)):
        if comp.genus is None:
            continue
        report.checks.append(
            BoundCheck(
                "genus >= effective bound", comp.genus, lower, comp.genus >= lower, comp.spin
            )
        )
        if square_bounds is not None:
            report.checks.append(
                BoundCheck(
                    "genus >= square bound",
                    comp.genus,
                    square_bounds[i],
                    comp.genus >= square_bounds[i],
                    comp.spin,
                )
            )
    for failure in report.failures:
        logger.warning(
            "D=%d: bound %s fails (%s vs %s)", value, failure.name, failure.value, failure.bound
        )
    return report


def _compare_row(
    report: VerifyReport, computed: ComponentInvariants, row: TableBRow, auditor: Optional[Auditor]
) -> None:
    columns = ["e2", "e4", "e5", "chi"]
    if row.ref_only:
        report.echoed_cells += 2
    else:
        columns += ["genus", "cusps"]
    for column in columns:
        expected = getattr(row, column)
        got = getattr(computed, column)
        if expected != got:
            _mismatch(report, auditor, CellMismatch("B", row.D, row.spin, column, expected, got))


def _mismatch(report: VerifyReport, auditor: Optional[Auditor], mismatch: CellMismatch) -> None:
    report.mismatches.append(mismatch)
    logger.error(
        "table %s, D=%d, spin %s, %s: expected %s, computed %s",
        mismatch.table,
        mismatch.D,
        mismatch.spin,
        mismatch.column,
        mismatch.expected,
        mismatch.computed,
    )
    if auditor is not None:
        auditor.record(
            {
                "event": "cell_mismatch",
                "table": mismatch.table,
                "D": mismatch.D,
                "spin": mismatch.spin,
                "column": mismatch.column,
                "expected": str(mismatch.expected),
                "computed": str(mismatch.computed),
            }
        )


def verify_table_b(
    tables: ReferenceTables,
    report: VerifyReport,
    auditor: Optional[Auditor] = None,
    computed: Optional[dict] = None,
) -> None:
    """
    Recompute every Table B row and diff it cell by cell.

    Args:
        computed: Optional precomputed {D: [ComponentInvariants]} from a sweep.
    """
    for D, rows in tables.by_discriminant().items():
        components = (computed or {}).get(D) or compute_invariants(D)
        by_spin = {c.spin: c for c in components}
        for row in rows:
            report.rows_checked += 1
            comp = by_spin.get(row.spin)
            if comp is None:
                _mismatch(
                    report,
                    auditor,
                    CellMismatch(
                        "B", D, row.spin, "components", row.spin, sorted(by_spin, key=str)
                    ),
                )
                continue
            _compare_row(report, comp, row, auditor)


def verify_table_c(
    tables: ReferenceTables,
    report: VerifyReport,
    settings: Settings,
    auditor: Optional[Auditor] = None,
) -> None:
    """Recompute every Table C polynomial and compare it in the row's form."""
    for row in tables.table_c:
        report.polynomials_checked += 1
        expected = row.poly()
        computed = fd_with_retry(row.D, settings)
        if row.form == "primitive":
            ok = computed.primitive() == expected.primitive()
            shown = computed.primitive()
        elif row.form == "radical":
            ok = computed.radical() == expected.monic()
            shown = computed.radical()
        else:
            factors = [f for f, _ in computed.factors()]
            ok = expected.primitive() in factors
            shown = " * ".join(f"({f})" for f in factors)
        if not ok:
            mismatch = CellMismatch("C", row.D, None, row.form, row.polynomial, str(shown))
            _mismatch(report, auditor, mismatch)


def verify_reference_tables(
    path=None,
    settings: Optional[Settings] = None,
    auditor: Optional[Auditor] = None,
    polynomials: bool = True,
    computed: Optional[dict] = None,
) -> VerifyReport:
    """
    Regression of the computed invariants and polynomials against the reference tables.

    Square rows are compared in the e2 and chi columns; their genus and cusp
    cells are echoed.

    Args:
        path: Directory with table_b.csv and table_c.csv, or None for the bundled tables.
        settings: Precision settings for the f_D evaluation.
        auditor: Receives one ``cell_mismatch`` event per failing cell.
        polynomials: Whether to check Table C.
        computed: Optional precomputed Table B invariants.

    Returns:
        The per-cell report; ``report.ok`` is False on any mismatch.
    """
    tables = load_reference_tables(path)
    settings = settings or Settings()
    report = VerifyReport()
    verify_table_b(tables, report, auditor, computed)
    if polynomials:
        verify_table_c(tables, report, settings, auditor)
    logger.info("verification: %s", report.summary())
    return report
