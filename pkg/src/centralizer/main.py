"""Main CLI entry point for the centralizer verification engine."""

from pathlib import Path
from typing import Annotated, Any, Dict, List, NoReturn, Optional

import typer
from dotenv import load_dotenv
from pydantic import ValidationError
from rich import print as rprint
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from . import __version__
from .config import PRESENTATIONS_DIR
from .errors import CentralizerError, InconclusiveError
from .logger import LogConfig, LogLevel, configure_logger, get_logger
from .models import CheckResult, RunConfig, SuiteReport
from .ncalg import Presentation, certified_dimension
from .settings import Settings, load_settings
from .suite import ALGEBRAS, Task, paper_tasks, parse_triple, run_tasks

# Load environment variables
load_dotenv()

app = typer.Typer(
    name="centralizer",
    help="Centralizer - exact verification of su(2) centralizers as Racah quotients",
    add_completion=False,
)
console = Console()
logger = get_logger("centralizer-cli")

SpinArg = Annotated[str, typer.Argument(help="Spin as a half-integer, e.g. 1/2, 1, 3/2")]
ConfigOpt = Annotated[
    Optional[str], typer.Option("--config", "-c", help="Path to centralizer configuration file")
]
LogLevelOpt = Annotated[Optional[str], typer.Option("--log-level", "-l", help="Logging level")]
LmaxOpt = Annotated[
    Optional[int], typer.Option("--lmax", help="Largest truncation degree tried (4-12)")
]
OutputOpt = Annotated[Optional[str], typer.Option("--output", "-o", help="Output format: text or json")]
ParallelOpt = Annotated[
    Optional[bool], typer.Option("--parallel/--no-parallel", help="Run independent checks in worker processes")
]


def _fail(message: Any, code: int = 1) -> NoReturn:
    rprint(f"[bold red]Error:[/bold red] {message}")
    raise typer.Exit(code)


def _settings(
    config_path: Optional[str],
    log_level: Optional[str],
    lmax: Optional[int] = None,
    output: Optional[str] = None,
    parallel: Optional[bool] = None,
    abstract_lmax: Optional[int] = None,
) -> Settings:
    """Load settings, apply command-line overrides and configure logging."""
    try:
        settings = load_settings(config_path)
        overrides = {
            "lmax": lmax,
            "max_abstract_degree": abstract_lmax,
            "output": output.lower() if output else None,
            "parallel": parallel,
            "log_level": log_level.upper() if log_level else None,
        }
        merged = {**settings.model_dump(), **{k: v for k, v in overrides.items() if v is not None}}
        settings = Settings(**merged)
    except (CentralizerError, ValidationError) as e:
        _fail(e)
    configure_logger(LogConfig(level=LogLevel(settings.log_level)))
    return settings


def _triple(values: List[str], cap: int) -> List[str]:
    try:
        parse_triple(values, cap)
    except CentralizerError as e:
        _fail(e)
    return values


def _verdict(result: CheckResult) -> str:
    if result.inconclusive:
        return "[yellow]inconclusive[/yellow]"
    return "[green]verified[/green]" if result.verified else "[red]failed[/red]"


def _render(report: SuiteReport) -> None:
    table = Table(title=f"centralizer {report.command}", title_style="bold blue")
    table.add_column("Check", style="cyan", no_wrap=True)
    table.add_column("Result")
    table.add_column("Details", overflow="fold")
    for result in report.results:
        table.add_row(result.name, _verdict(result), Text(str(result.detail.get("summary", ""))))
    console.print(table)

    for result in report.results:
        if "lines" in result.detail:
            console.print(
                Panel(
                    Text("\n".join(result.detail["lines"])),
                    title=Text("Bratteli diagram", style="bold blue"),
                    border_style="blue",
                    padding=(1, 2),
                )
            )
        if "coupling" in result.detail and report.command == "bratteli":
            sets = Table(title="Coupling sets", title_style="bold blue")
            sets.add_column("Set", style="cyan")
            sets.add_column("Values")
            for key, values in result.detail["coupling"].items():
                sets.add_row(key, ", ".join(values))
            console.print(sets)

    if report.inconclusive:
        rprint(f"[yellow]{len(report.inconclusive)} inconclusive check(s); raise --lmax[/yellow]")
    elif report.verified:
        rprint(f"[bold green]All {len(report.results)} check(s) verified[/bold green]")
    else:
        failed = sum(not r.verified for r in report.results)
        rprint(f"[bold red]{failed} check(s) failed[/bold red]")


def _emit(
    command: str, settings: Settings, tasks: List[Task], spins: Optional[List[List[str]]] = None
) -> None:
    """Run ``tasks``, print the report and exit with its code."""
    run_config = RunConfig(
        command=command,
        spins=spins or [],
        lmax=settings.lmax,
        lmin=settings.lmin,
        spin_cap=settings.spin_cap,
        output=settings.output,
        parallel=settings.parallel,
        workers=settings.workers,
    )
    logger.debug(f"running {len(tasks)} check(s) for {command}")
    results = run_tasks(tasks, settings.parallel, settings.workers)
    report = SuiteReport.collect(command, run_config.canonical_inputs(), results)
    if settings.output == "json":
        typer.echo(report.to_json())
    else:
        _render(report)
    if report.exit_code:
        raise typer.Exit(report.exit_code)


def _degrees(settings: Settings) -> Dict[str, int]:
    return {"lmin": settings.lmin, "lmax": settings.lmax}


@app.command()
def version():
    """Show centralizer version information."""
    rprint(f"[bold blue]Centralizer[/bold blue] v[bold green]{__version__}[/bold green]")
    rprint("[dim]Exact verification of su(2) tensor-product centralizers[/dim]")


@app.command()
def config(config_path: ConfigOpt = None, log_level: LogLevelOpt = None):
    """Show the effective configuration."""
    settings = _settings(config_path, log_level)
    panel = Panel(
        str(settings),
        title=Text("Centralizer Configuration", style="bold blue"),
        border_style="blue",
        padding=(1, 2),
    )
    console.print(panel)


@app.command()
def bratteli(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Print the Bratteli diagram and the coupling sets J and M."""
    settings = _settings(config_path, log_level, output=output)
    spins = _triple([j1, j2, j3], settings.spin_cap)
    _emit("bratteli", settings, [("bratteli", {"spins": spins, "cap": settings.spin_cap})], [spins])


@app.command()
def dim(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    span: Annotated[bool, typer.Option("--span", help="Also close the span of the Casimir matrices")] = False,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Centralizer dimension as the sum of squared multiplicities."""
    settings = _settings(config_path, log_level, output=output)
    cap = settings.conjecture_spin_cap if span else settings.spin_cap
    spins = _triple([j1, j2, j3], cap)
    _emit("dim", settings, [("dim", {"spins": spins, "cap": cap, "with_matrix": span})], [spins])


@app.command()
def kernel(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Check that every quotient relation vanishes on the Casimir matrices."""
    settings = _settings(config_path, log_level, output=output)
    spins = _triple([j1, j2, j3], settings.spin_cap)
    _emit("kernel", settings, [("kernel", {"spins": spins, "cap": settings.spin_cap})], [spins])


@app.command()
def conjecture(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    method: Annotated[
        str, typer.Option("--method", "-m", help="characters (per central character) or direct")
    ] = "characters",
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Compare the matrix lower bound with the certified quotient dimension."""
    if method not in ("characters", "direct"):
        _fail(f"unknown method {method!r}; expected characters or direct")
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    cap = settings.conjecture_spin_cap
    spins = _triple([j1, j2, j3], cap)
    task = ("conjecture", {"spins": spins, "method": method, "cap": cap, **_degrees(settings)})
    _emit("conjecture", settings, [task], [spins])


@app.command()
def characters(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Certified quotient dimension at each value of the central generator."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    cap = settings.conjecture_spin_cap
    spins = _triple([j1, j2, j3], cap)
    task = ("characters", {"spins": spins, "cap": cap, **_degrees(settings)})
    _emit("characters", settings, [task], [spins])


@app.command()
def s3(
    j1: SpinArg,
    j2: SpinArg,
    j3: SpinArg,
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Check the permutation laws of the coupling sets and the transposition maps."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    cap = settings.conjecture_spin_cap
    spins = _triple([j1, j2, j3], cap)
    task = ("s3", {"spins": spins, "cap": cap, **_degrees(settings)})
    _emit("s3", settings, [task], [spins])


@app.command()
def iso(
    algebra: Annotated[str, typer.Argument(help=f"One of {', '.join(ALGEBRAS)}")],
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Check an isomorphism between a diagram algebra and a Racah quotient."""
    key = algebra.strip().lower()
    if key not in ("tl", "brauer", "bb") and not key.startswith("btl:"):
        _fail(f"unknown algebra {algebra!r}; expected one of {', '.join(ALGEBRAS)}")
    settings = _settings(config_path, log_level, output=output, abstract_lmax=lmax)
    task = ("iso", {"algebra": key, "lmax": settings.max_abstract_degree})
    _emit("iso", settings, [task])


@app.command()
def hjk(
    j: SpinArg,
    k: SpinArg,
    c: Annotated[str, typer.Argument(help="Value of the central generator, e.g. 7/4")],
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Certify the basis {1, A, B, AB} of the (j, 1/2, k) quotient at C = c."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    _triple([j, "1/2", k], settings.conjecture_spin_cap)
    task = ("hjk", {"j": j, "k": k, "c": c, **_degrees(settings)})
    _emit("hjk", settings, [task], [[j, "1/2", k]])


@app.command()
def braid(
    j: SpinArg,
    z: Annotated[str, typer.Argument(help="Shift parameter z")],
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Check the braid relations of the shifted generators in H(j, j, c)."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    _triple([j, "1/2", j], settings.conjecture_spin_cap)
    task = ("braid", {"j": j, "z": z, **_degrees(settings)})
    _emit("braid", settings, [task], [[j, "1/2", j]])


@app.command()
def redundancy(
    j: SpinArg,
    k: SpinArg,
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Compare character dimensions with and without the removable relations."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output)
    _triple([j, "1/2", k], settings.conjecture_spin_cap)
    task = ("redundancy", {"j": j, "k": k, **_degrees(settings)})
    _emit("redundancy", settings, [task], [[j, "1/2", k]])


@app.command()
def identities(
    case: Annotated[str, typer.Argument(help="tl-simplified, brauer-C, btl-lemma:<j>, bB-G or bB-presentation")],
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Evaluate closed-form identities on the Casimir matrices."""
    settings = _settings(config_path, log_level, output=output)
    _emit("identities", settings, [("identities", {"case": case})])


@app.command("paper-suite")
def paper_suite(
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    parallel: ParallelOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Recompute every published dimension, set and identity."""
    settings = _settings(config_path, log_level, lmax=lmax, output=output, parallel=parallel)
    tasks = paper_tasks(
        lmin=settings.lmin,
        lmax=settings.lmax,
        abstract_lmax=settings.max_abstract_degree,
        cap=settings.conjecture_spin_cap,
    )
    if settings.output == "text":
        rprint(f"[dim]Running {len(tasks)} checks...[/dim]")
    _emit("paper-suite", settings, tasks)


def _parameters(values: List[str]) -> Dict[str, str]:
    parsed = {}
    for item in values:
        key, sep, value = item.partition("=")
        if not sep:
            _fail(f"parameter {item!r} is not of the form name=value")
        parsed[key.strip()] = value.strip()
    return parsed


def _resolve(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    bundled = PRESENTATIONS_DIR / f"{name}.yaml"
    if bundled.exists():
        return bundled
    available = ", ".join(sorted(p.stem for p in PRESENTATIONS_DIR.glob("*.yaml")))
    _fail(f"no presentation {name!r}; bundled: {available}")


@app.command()
def presentation(
    name: Annotated[str, typer.Argument(help="Bundled presentation name or path to a YAML file")],
    param: Annotated[
        Optional[List[str]], typer.Option("--param", "-p", help="Parameter override name=value")
    ] = None,
    target: Annotated[Optional[int], typer.Option("--target", help="Expected dimension")] = None,
    lmax: LmaxOpt = None,
    output: OutputOpt = None,
    config_path: ConfigOpt = None,
    log_level: LogLevelOpt = None,
):
    """Certify the dimension of a finitely presented algebra given in YAML."""
    settings = _settings(config_path, log_level, output=output, abstract_lmax=lmax)
    path = _resolve(name)
    try:
        algebra = Presentation.load(path, _parameters(param or []))
    except (OSError, CentralizerError) as e:
        _fail(e)
    degree = settings.max_abstract_degree
    try:
        cert = certified_dimension(algebra, target=target, lmin=settings.lmin, lmax=degree)
        result = CheckResult(
            name=f"presentation {algebra.name}",
            verified=target is None or cert.dimension == target,
            detail={
                "dimension": cert.dimension,
                "degree": cert.degree,
                "basis": cert.basis_text(),
                "summary": f"dim = {cert.dimension} at degree {cert.degree}",
            },
        )
    except CentralizerError as e:
        result = CheckResult(
            name=f"presentation {algebra.name}",
            verified=False,
            inconclusive=isinstance(e, InconclusiveError),
            detail={"error": str(e), "summary": str(e)},
        )
    report = SuiteReport.collect("presentation", {"path": str(path), "lmax": degree}, [result])
    if settings.output == "json":
        typer.echo(report.to_json())
    else:
        console.print(Panel(Text(algebra.to_yaml()), title=Text(algebra.name, style="bold blue"), border_style="blue"))
        _render(report)
    if report.exit_code:
        raise typer.Exit(report.exit_code)


def main():
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
