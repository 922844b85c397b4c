"""Command-line entry point: `hvdist <command>`."""
from pathlib import Path
from typing import Callable, Optional, Tuple
import logging
import sys

import click
from rich.console import Console
from rich.table import Table

from . import __version__
from . import experiments
from .exceptions import HvDistError
from .experiments import Budget, ExperimentReport, Verdict
from .logger import setup_logger
from .models import list_fronts
from .results import ResultsManager
from .settings import settings
from .thread_manager import ThreadManager
from .utils import monitor

logger = logging.getLogger(__name__)
console = Console()

VERDICT_STYLE = {Verdict.PASS: "green", Verdict.FAIL: "bold red", Verdict.INFO: "cyan"}

def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.4f}"

def render_report(report: ExperimentReport) -> None:
    """Print a report as a rich table"""
    budget = report.budget
    caption = f"seed {report.seed}, " + (
        f"{budget.name} budget {budget.generations} x {budget.runs}" if budget else "no search"
    ) + f", v{report.version}" + (f", {report.runtime:.1f}s" if report.runtime else f", stored {report.created_at}")
    table = Table(title=report.experiment, caption=caption)
    for column, justify in [("front", "left"), ("case", "left"), ("r", "right"), ("uniform/DAS", "right"),
                            ("search", "right"), ("expected", "right"), ("verdict", "center"), ("detail", "left")]:
        table.add_column(column, justify=justify)
    for row in report.rows:
        table.add_row(
            row.front, row.case, f"{row.reference:.4g}", _fmt(row.das_hv), _fmt(row.search_hv),
            _fmt(row.expected), f"[{VERDICT_STYLE[row.verdict]}]{row.verdict.value}[/]", row.detail,
        )
    console.print(table)

def _run(ctx: click.Context, name: str, producer: Callable[..., ExperimentReport], **kwargs) -> None:
    """Build the report, render and store it, then exit with its verdict"""
    obj = ctx.obj
    try:
        report = monitor.measure(name)(producer)(
            budget=obj["budget"], seed=obj["seed"], manager=obj["manager"], **kwargs
        )
        render_report(report)
        obj["results"].save_report(report.to_dict(), report.experiment)
        logger.info(f"{name} finished in {monitor.total(name):.1f}s")
    except HvDistError as e:
        logger.error(f"{name} failed: {e}")
        console.print(f"[bold red]Error:[/] {e}")
        ctx.exit(2)
    ctx.exit(0 if report.passed else 1)

@click.group()
@click.version_option(__version__, prog_name="hvdist")
@click.option("--runs", type=click.IntRange(min=1), default=None, help="Independent search runs per case.")
@click.option("--generations", type=click.IntRange(min=1), default=None, help="Generations per search run.")
@click.option("--seed", type=click.IntRange(min=0), default=settings.DEFAULT_SEED, show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Directory for reports and exports.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None,
              help="Export file format.")
@click.option("--paper-budget", is_flag=True, help="Use 10,000 generations x 100 runs.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Concurrent search runs.")
@click.pass_context
def cli(ctx: click.Context, runs: Optional[int], generations: Optional[int], seed: int,
        out_dir: Optional[Path], fmt: Optional[str], paper_budget: bool, workers: Optional[int]):
    """Hypervolume optimal distributions on line- and plane-based fronts."""
    setup_logger("src")
    ctx.ensure_object(dict)
    ctx.obj.update(
        budget=Budget.resolve(runs, generations, paper_budget),
        seed=seed,
        fmt=fmt,
        manager=ThreadManager(workers),
        results=ResultsManager(out_dir),
    )

def _h_values(h: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    return h or None

@cli.command()
@click.option("-H", "h", type=click.IntRange(1, 10), multiple=True, help="Restrict to these H values.")
@click.option("--no-search", is_flag=True, help="Only evaluate the DAS sets.")
@click.pass_context
def table1(ctx: click.Context, h: Tuple[int, ...], no_search: bool):
    """DAS sets on the triangular front versus search."""
    _run(ctx, "table1", experiments.table1, h_values=_h_values(h), with_search=not no_search)

@cli.command()
@click.option("-H", "h", type=click.IntRange(1, 10), multiple=True, help="Restrict to these H values.")
@click.option("--no-search", is_flag=True, help="Only evaluate the inverted DAS sets.")
@click.pass_context
def table2(ctx: click.Context, h: Tuple[int, ...], no_search: bool):
    """Inverted DAS sets on the inverted triangular front versus search."""
    _run(ctx, "table2", experiments.table2, h_values=_h_values(h), with_search=not no_search)

@cli.command()
@click.argument("kinds", nargs=-1, type=click.Choice(["type_iii", "type_iv", "type_v", "type_vi"]))
@click.option("--no-search", is_flag=True, help="Skip the random-start search.")
@click.pass_context
def fig1(ctx: click.Context, kinds: Tuple[str, ...], no_search: bool):
    """Uniform versus nonuniform sets on the multi-line fronts."""
    _run(ctx, "fig1", experiments.fig1, kinds=kinds or None, with_search=not no_search)

@cli.command()
@click.option("--no-search", is_flag=True, help="Only evaluate the DAS sets.")
@click.pass_context
def fig2(ctx: click.Context, no_search: bool):
    """Both plane fronts at H = 8."""
    _run(ctx, "fig2", experiments.fig2, with_search=not no_search)

@cli.command()
@click.argument("theorem_id", type=click.Choice(experiments.list_verifiers(), case_sensitive=False))
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Random points per local-optimality check.")
@click.pass_context
def verify(ctx: click.Context, theorem_id: str, trials: Optional[int]):
    """Run a theorem verification suite (or ALL)."""
    options = {} if trials is None else {"local_opt_trials": trials}
    _run(ctx, "verify", experiments.verify, theorem_id=theorem_id, **options)

@cli.command()
@click.option("--front", type=click.Choice(list_fronts()), required=True)
@click.option("--size", type=int, required=True, help="H on plane fronts, intervals per line otherwise.")
@click.option("--reference", type=float, default=None, help="Reference coordinate r (default -1/H or -1).")
@click.option("--source", type=click.Choice(["uniform", "search"]), default="uniform", show_default=True)
@click.pass_context
def export(ctx: click.Context, front: str, size: int, reference: Optional[float], source: str):
    """Write a point set and its contributions for plotting."""
    _run(ctx, "export", experiments.export, front=front, size=size, reference=reference,
         source=source, fmt=ctx.obj["fmt"], results=ctx.obj["results"])

@cli.command()
@click.argument("name", required=False)
@click.option("--delete", is_flag=True, help="Remove the stored report instead of showing it.")
@click.pass_context
def report(ctx: click.Context, name: Optional[str], delete: bool):
    """List stored reports and exports, or show one stored report again."""
    results: ResultsManager = ctx.obj["results"]
    if name is None:
        table = Table(title=f"Results in {results.output_dir}")
        table.add_column("kind")
        table.add_column("name")
        stored = results.list_reports()
        for entry in stored:
            table.add_row("report", entry)
        for exported in results.exporter.list_exports():
            if Path(exported).stem not in stored:
                table.add_row("export", exported)
        console.print(table)
        return
    if delete:
        if not results.delete_report(name):
            console.print(f"[bold red]Error:[/] no stored report '{name}'")
            ctx.exit(2)
        console.print(f"Deleted report '{name}'")
        return
    try:
        data = results.load_report(name)
    except HvDistError as e:
        console.print(f"[bold red]Error:[/] {e}")
        ctx.exit(2)
    if data is None:
        console.print(f"[bold red]Error:[/] no stored report '{name}'")
        ctx.exit(2)
    loaded = ExperimentReport.from_dict(data)
    render_report(loaded)
    ctx.exit(0 if loaded.passed else 1)

def main(argv=None) -> None:
    cli.main(args=argv, prog_name="hvdist")

if __name__ == "__main__":
    main(sys.argv[1:])
