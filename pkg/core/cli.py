"""
Command-line front end.

    weierstrass invariants 44
    weierstrass table --from 5 --to 225 --format csv
    weierstrass fd 76
    weierstrass verify

Exit status is 0 on success, 1 for a domain error (bad argument, invalid
discriminant, operation undefined for D) and 2 for a consistency failure.
"""

import csv
import io
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click

from core import errors
from core.arith import as_discriminant
from core.audits import LoggingAuditor
from core.classnum import class_number, reduced_forms, weighted_class_number
from core.config import ENV_TABLES, Settings
from core.context import ExecutionContext
from core.errors import ConsistencyError, DomainError, WeierstrassError
from core.executors import SweepExecutor
from core.models import SweepTask, TaskStatus
from core.orchestrator import Orchestrator
from core.reference import load_reference_tables
from core.schedulers import BatchScheduler
from core.schema import CSV_HEADER, ComponentRow, OutputRecord, rational_text, to_jsonable
from core.topology import genus_zero_components, verify_reference_tables

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CONSISTENCY = 2


def exit_code_for(kind: Optional[str]) -> int:
    """Exit status for an exception class name from core.errors."""
    cls = getattr(errors, kind or "", None)
    if isinstance(cls, type) and issubclass(cls, DomainError):
        return EXIT_DOMAIN
    return EXIT_CONSISTENCY


class Runtime:
    """Per-invocation state built from the group options."""

    def __init__(self, settings: Settings, timing: bool) -> None:
        self.settings = settings
        self.timing = timing
        self.started = time.perf_counter()
        self._ctx: Optional[ExecutionContext] = None

    @property
    def ctx(self) -> ExecutionContext:
        if self._ctx is None:
            tables = load_reference_tables(self.settings.tables_dir)
            self._ctx = ExecutionContext.from_settings(self.settings, tables=tables)
        return self._ctx

    def with_precision(self, bits: Optional[int]) -> None:
        if bits is None:
            return
        values = self.settings.model_dump()
        ceiling = max(bits, values["max_precision_bits"])
        values.update(precision_bits=bits, max_precision_bits=ceiling)
        self.settings = Settings.build(**values)
        self._ctx = None

    def emit(self, command: str, params: Dict[str, Any], result: Any) -> None:
        elapsed = None
        if self.timing:
            elapsed = round((time.perf_counter() - self.started) * 1000, 3)
        record = OutputRecord(
            command=command, params=params, result=to_jsonable(result), elapsed_ms=elapsed
        )
        click.echo(record.to_json())

    def run_single(self, action: str, D: int, **params) -> Any:
        """Run one sweep task in-process and return its result, raising on failure."""
        as_discriminant(D)
        task = SweepTask(id=f"{action}-{D}", action=action, params={**params, "D": D})
        SweepExecutor().execute(task, self.ctx)
        if task.status != TaskStatus.SUCCESS:
            raise _TaskFailed(task)
        return task.result


class _TaskFailed(Exception):
    def __init__(self, task: SweepTask) -> None:
        super().__init__(task.error)
        self.task = task


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else (logging.INFO if verbose == 1 else logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


@click.group()
@click.option("--jobs", "-j", type=int, default=None, help="Worker processes for sweeps.")
@click.option("--precision", type=int, default=None, help="Working precision in bits for fd.")
@click.option(
    "--tables",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    envvar=ENV_TABLES,
    default=None,
    help="Directory with table_b.csv and table_c.csv.",
)
@click.option("--verbose", "-v", count=True, help="Log to stderr (-vv for debug).")
@click.option("--timing", is_flag=True, help="Add elapsed_ms to JSON output.")
@click.pass_context
def cli(ctx, jobs, precision, tables, verbose, timing):
    """Invariants and algebraic models of the Weierstrass curves W_D."""
    _configure_logging(verbose)
    settings = Settings.from_env(jobs=jobs, precision_bits=precision, tables_dir=tables)
    ctx.obj = Runtime(settings, timing)


@cli.command()
@click.argument("D", type=int)
@click.pass_obj
def invariants(rt: Runtime, d: int):
    """Genus, orbifold points, cusps and Euler characteristic of each component of W_D."""
    rt.emit("invariants", {"D": d}, rt.run_single("invariants", d))


@cli.command()
@click.option("--from", "start", type=int, required=True, help="First discriminant.")
@click.option("--to", "stop", type=int, required=True, help="Last discriminant (inclusive).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.pass_obj
def table(rt: Runtime, start: int, stop: int, fmt: str):
    """Invariants for every valid discriminant in a range."""
    ctx = rt.ctx
    orchestrator = Orchestrator(
        BatchScheduler(max_parallel=ctx.jobs), SweepExecutor(), LoggingAuditor()
    )
    plan = orchestrator.run(Orchestrator.plan_range("invariants", start, stop), ctx)

    rows: List[ComponentRow] = []
    for task in plan.tasks:
        if task.status == TaskStatus.SUCCESS:
            rows.extend(ComponentRow.from_invariants(c) for c in task.result)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_cells())
        click.echo(buffer.getvalue(), nl=False)
    else:
        rt.emit("table", {"from": start, "to": stop}, [r.model_dump() for r in rows])

    failed = Orchestrator.failed_tasks(plan)
    for task in failed:
        click.echo(f"D={task.params['D']}: {task.error_kind}: {task.error}", err=True)
    if failed:
        sys.exit(max(exit_code_for(t.error_kind) for t in failed))


@cli.command()
@click.argument("D", type=int)
@click.option("--all", "include_all", is_flag=True, help="Include improper prototypes.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_obj
def prototypes(rt: Runtime, d: int, include_all: bool, fmt: str):
    """Prototypes (e, c, b) of D with their spin when W_D is split."""
    result = rt.run_single("prototypes", d, all=include_all)
    if fmt == "json":
        rt.emit("prototypes", {"D": d, "all": include_all}, result)
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["D", "e", "c", "b", "spin"])
    for row in result:
        writer.writerow([d, row["e"], row["c"], row["b"], row.get("spin", "")])
    click.echo(buffer.getvalue(), nl=False)


@cli.command()
@click.argument("D", type=int)
@click.option(
    "--form",
    type=click.Choice(["reference", "defining", "primitive", "radical"]),
    default="reference",
    help="Form used by Table C for D (primitive when D is not listed), defining product, "
    "integer primitive form, or monic squarefree part.",
)
@click.option("--precision", "bits", type=int, default=None, help="Working precision in bits.")
@click.option("--json", "as_json", is_flag=True, help="Emit exact coefficients as JSON.")
@click.pass_obj
def fd(rt: Runtime, d: int, form: str, bits: Optional[int], as_json: bool):
    """The polynomial f_D(t) whose roots are the a-values of the orbifold points."""
    rt.with_precision(bits)
    poly = rt.run_single("fd", d)
    if form == "reference":
        row = rt.ctx.tables.polynomial_for(d)
        shown = row.in_form(poly) if row is not None else None
        if shown is None:
            form, shown = "primitive", poly.primitive()
        else:
            form = row.form
    else:
        shown = {"defining": poly, "primitive": poly.primitive(), "radical": poly.radical()}[form]
    factors = poly.factors()
    if as_json:
        rt.emit(
            "fd",
            {"D": d, "form": form, "precision": rt.settings.precision_bits},
            {
                "polynomial": shown.to_text(),
                "coefficients": [rational_text(c) for c in shown.coeffs],
                "factors": [{"factor": f.to_text(), "multiplicity": k} for f, k in factors],
            },
        )
        return
    click.echo(shown.to_text())
    click.echo(" * ".join(f"({f})" if k == 1 else f"({f})^{k}" for f, k in factors))


@cli.command()
@click.argument("D", type=int)
@click.pass_obj
def chi(rt: Runtime, d: int):
    """Euler characteristics of X_D, P_D, S_D and W_D."""
    rt.emit("chi", {"D": d}, rt.run_single("chi", d))


@cli.command()
@click.argument("D", type=int)
@click.pass_obj
def cusps(rt: Runtime, d: int):
    """Components of P_D and their cusp counts."""
    rt.emit("cusps", {"D": d}, rt.run_single("cusps", d))


@cli.command()
@click.argument("C", type=int)
@click.pass_obj
def classnumber(rt: Runtime, c: int):
    """Class number h(C) and weighted class number of a negative discriminant C."""
    forms = [(f.a, f.b, f.c) for f in reduced_forms(c)]
    result = {"h": class_number(c), "h_weighted": weighted_class_number(c), "forms": forms}
    rt.emit("classnumber", {"C": c}, result)


@cli.command("genus-zero")
@click.option("--max", "d_max", type=int, default=1000, show_default=True)
@click.pass_obj
def genus_zero(rt: Runtime, d_max: int):
    """Every genus zero component of W_D for D up to --max."""
    found = genus_zero_components(d_max, rt.ctx.tables)
    rt.emit("genus-zero", {"max": d_max}, [{"D": D, "spin": spin} for D, spin in found])


@cli.command()
@click.option("--no-polynomials", is_flag=True, help="Skip the f_D comparisons.")
@click.pass_obj
def verify(rt: Runtime, no_polynomials: bool):
    """Recompute the reference tables and report mismatched cells."""
    report = verify_reference_tables(
        rt.settings.tables_dir,
        settings=rt.settings,
        auditor=LoggingAuditor(),
        polynomials=not no_polynomials,
    )
    for m in report.mismatches:
        spin = "" if m.spin is None else f" spin {m.spin}"
        click.echo(
            f"table {m.table} D={m.D}{spin} {m.column}: "
            f"expected {m.expected}, computed {m.computed}",
            err=True,
        )
    click.echo(report.summary())
    if not report.ok:
        sys.exit(EXIT_CONSISTENCY)


@cli.command()
@click.argument("D", type=int)
@click.pass_obj
def bounds(rt: Runtime, d: int):
    """Evaluate the effective inequalities for D."""
    report = rt.run_single("bounds", d)
    rt.emit("bounds", {"D": d}, {"ok": report.ok, "checks": report.checks})
    if not report.ok:
        names = ", ".join(c.name for c in report.failures)
        raise ConsistencyError(f"bounds fail for D={d}: {names}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return its exit status.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
    """
    try:
        cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_DOMAIN
    except click.Abort:
        return EXIT_DOMAIN
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK
    except _TaskFailed as e:
        click.echo(f"error: {e.task.error}", err=True)
        return exit_code_for(e.task.error_kind)
    except DomainError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_DOMAIN
    except WeierstrassError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_CONSISTENCY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
