from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import List, Optional

import typer
from pydantic import TypeAdapter

from config import configure_logging
from config.settings import BATCH_WORKERS, JSON_INDENT, TOOL_NAME, TOOL_VERSION
from shared.errors import InputFormatError

from . import services
from .enums import ExitCode
from .fixtures import run_checks
from .parser import list_presets, parse_fraction, parse_term, parse_vector
from .rendering import render_text
from .serializers import Report

app = typer.Typer(help="Demazure roots, toric derivations and B-root subgroups of spherical varieties")

FILES = typer.Argument(..., help="Input files; '-' reads stdin")
BOX = typer.Option(None, "--box", min=0, help="Sup-norm bound for enumeration (overrides the input file)")
JSON = typer.Option(False, "--json", help="Emit a JSON report")


@app.callback()
def main_callback(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr")):
    configure_logging("DEBUG" if verbose else None)


def emit(reports: list[Report], json_output: bool):
    if json_output:
        if len(reports) == 1:
            typer.echo(reports[0].model_dump_json(indent=JSON_INDENT))
        else:
            typer.echo(TypeAdapter(list[Report]).dump_json(reports, indent=JSON_INDENT).decode())
    else:
        typer.echo("\n\n".join(render_text(report) for report in reports))

    code = max(report.exit_code for report in reports)
    if code:
        raise typer.Exit(code=code)


def run_batch(command: str, files: list[str], runner, box: int | None) -> list[Report]:
    """One report per file, in argument order; files are processed concurrently."""

    if len(files) == 1:
        return [services.build_report(command, files[0], runner, box=box)]

    with ThreadPoolExecutor(max_workers=BATCH_WORKERS) as pool:
        return list(pool.map(lambda source: services.build_report(command, source, runner, box=box), files))


@app.command("dual")
def dual(files: List[str] = FILES, box: Optional[int] = BOX, json_output: bool = JSON):
    """Dual cone, its rays and the facet of each ray."""

    emit(run_batch("dual", files, services.run_dual, box), json_output)


@app.command("roots")
def roots(
    files: List[str] = FILES,
    box: Optional[int] = BOX,
    json_output: bool = JSON,
    filter_dominant: bool = typer.Option(False, "--filter-dominant", help="Keep only dominant roots"),
):
    """Demazure roots inside the box, grouped by ray."""

    runner = partial(services.run_roots, filter_dominant=filter_dominant)
    emit(run_batch("roots", files, runner, box), json_output)


@app.command("classify")
def classify(files: List[str] = FILES, box: Optional[int] = BOX, json_output: bool = JSON):
    """Classify B-root subgroups of a rank-one or horospherical input."""

    emit(run_batch("classify", files, services.run_classify, box), json_output)


@app.command("act")
def act(
    files: List[str] = FILES,
    root: str = typer.Option(..., "--root", help="Demazure root, e.g. '-1 2'"),
    term: List[str] = typer.Option(..., "--term", help="Term 'u1 u2 ...[:coefficient]', repeatable"),
    s: str = typer.Option("1", "--s", help="Group parameter (rational)"),
    box: Optional[int] = BOX,
    json_output: bool = JSON,
):
    """Apply the derivation of a root and its exponential to an algebra element."""

    try:
        e = parse_vector(root)
        terms = [parse_term(t) for t in term]
        parameter = parse_fraction(s)
    except InputFormatError as exc:
        typer.echo(f"❌ {exc.message}", err=True)
        raise typer.Exit(code=ExitCode.INPUT_ERROR)

    runner = partial(services.run_act, root=e, terms=terms, s=parameter)
    emit(run_batch("act", files, runner, box), json_output)


@app.command("verify")
def verify(json_output: bool = JSON):
    """Run the built-in fixture suite."""

    results = run_checks()
    failed = [r for r in results if not r.passed]
    report = Report(
        command="verify",
        source="builtin",
        results={
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        },
        exit_code=int(ExitCode.FAILURE if failed else ExitCode.OK),
    )

    if json_output:
        typer.echo(report.model_dump_json(indent=JSON_INDENT))
    else:
        for r in results:
            typer.echo(f"{'✅' if r.passed else '❌'} {r.name}: {r.detail}")
        typer.echo(f"{len(results) - len(failed)} passed, {len(failed)} failed")

    if failed:
        raise typer.Exit(code=ExitCode.FAILURE)


@app.command("presets")
def presets():
    """List the root-datum presets usable with `preset:`."""

    for name in list_presets():
        typer.echo(name)


@app.command("version")
def version():
    typer.echo(f"{TOOL_NAME} {TOOL_VERSION}")


def main():
    app()


if __name__ == "__main__":
    main()
