"""CLI entry point for qvertex."""

import json
import logging
from dataclasses import replace
from pathlib import Path
from typing import Optional

import typer
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from . import __version__, ui
from .config import Settings
from .errors import AdmissibilityError, QVertexError, RankConsistencyError, SingularMatrixError
from .filters import design_branching_filter, pair_coupling_class
from .io import (
    VertexInput,
    dump_case,
    dump_vertex,
    load_filter_spec,
    load_vertex,
    sweep as run_sweep,
    write_csv,
    write_json,
)
from .presets import PRESETS, get_preset
from .scattering import s_matrix
from .vertex import classify as classify_vertex
from .vertex import validate_admissible

# Load environment variables from .env file
load_dotenv()

app = typer.Typer(
    name="qvertex",
    help="Boundary conditions and scattering of singular quantum-graph vertices",
    add_completion=False,
)

EXIT_INVALID = 1
EXIT_USAGE = 2
CHECK_WAVE_NUMBERS = (0.1, 1.0, 10.0)


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("qvertex")
    logger.handlers.clear()
    logger.addHandler(
        RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    )
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False


def _fail(error: Exception) -> typer.Exit:
    """Print an error and return the matching exit."""
    ui.print_error(str(error))
    validation = (AdmissibilityError, RankConsistencyError, SingularMatrixError)
    return typer.Exit(EXIT_INVALID if isinstance(error, validation) else EXIT_USAGE)


def _settings() -> Settings:
    try:
        return Settings.from_env()
    except QVertexError as e:
        raise _fail(e) from None


def _load(input_path: Optional[Path], preset: Optional[str]) -> VertexInput:
    if (input_path is None) == (preset is None):
        ui.print_error("give exactly one of a vertex file or --preset")
        raise typer.Exit(EXIT_USAGE)
    try:
        if preset is not None:
            case = get_preset(preset).case
            return VertexInput(case.boundary(), case.form(), case)
        return load_vertex(input_path)
    except QVertexError as e:
        raise _fail(e) from None


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Boundary conditions and scattering of singular quantum-graph vertices."""
    _configure_logging(verbose)


@app.command()
def check(
    input_path: Optional[Path] = typer.Argument(None, help="Vertex JSON file"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Figure preset name"),
) -> None:
    """Validate a vertex: admissibility, rank class and unitarity of S(k)."""
    settings = _settings()
    vertex = _load(input_path, preset)
    report = validate_admissible(vertex.pair, rank_tol=settings.rank_tol)
    ui.print_admissibility(report)
    if not report.ok:
        raise typer.Exit(EXIT_INVALID)
    try:
        ui.print_vertex_class(classify_vertex(vertex.pair, settings.rank_tol))
        residuals = {
            k: s_matrix(vertex.pair, k, check=False).unitarity_residual()
            for k in CHECK_WAVE_NUMBERS
        }
    except QVertexError as e:
        raise _fail(e) from None
    ui.print_unitarity(residuals)


@app.command()
def sweep(
    input_path: Optional[Path] = typer.Argument(None, help="Vertex JSON file"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Figure preset name"),
    kmin: Optional[float] = typer.Option(None, "--kmin", help="Smallest wave number"),
    kmax: Optional[float] = typer.Option(None, "--kmax", help="Largest wave number"),
    points: Optional[int] = typer.Option(None, "--points", help="Number of log-spaced points"),
    out: Path = typer.Option(..., "--out", "-o", help="CSV file to write"),
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
    amplitudes: bool = typer.Option(
        False, "--amplitudes", help="Write complex amplitudes as re/im columns"
    ),
    dual: bool = typer.Option(False, "--dual", help="Tabulate the dual vertex (B, A)"),
) -> None:
    """Tabulate |R_i(k)|^2 and |T_ij(k)|^2 over a log-spaced k grid into a CSV file."""
    settings = _settings()
    vertex = _load(input_path, preset)
    try:
        result = run_sweep(
            vertex.pair,
            settings.kmin if kmin is None else kmin,
            settings.kmax if kmax is None else kmax,
            settings.points if points is None else points,
            dual=dual,
            rank_tol=settings.rank_tol,
        )
        write_csv(result, out, amplitudes=amplitudes, force=force)
    except (QVertexError, FileExistsError) as e:
        raise _fail(e) from None
    ui.print_success(f"wrote {len(result.k)} rows to {out}")
    ui.print_info(f"max flux residual {result.flux_residual():.2e}")


@app.command()
def classify(
    input_path: Optional[Path] = typer.Argument(None, help="Vertex JSON file"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Figure preset name"),
    epsilon: Optional[float] = typer.Option(
        None, "--epsilon", "-e", help="Smallness threshold for |T| limits"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
) -> None:
    """Report the rank class and the δ / δ′ character of every line pair."""
    settings = _settings()
    vertex = _load(input_path, preset)
    try:
        vertex_class = classify_vertex(vertex.pair, settings.rank_tol)
        couplings = pair_coupling_class(
            vertex.pair, settings.epsilon if epsilon is None else epsilon
        )
    except QVertexError as e:
        raise _fail(e) from None

    if as_json:
        report = {
            "n": vertex_class.n,
            "r_A": vertex_class.r_a,
            "r_B": vertex_class.r_b,
            "r_S": vertex_class.r_s,
            "case_label": vertex_class.case_label.value if vertex_class.case_label else None,
            "pairs": [
                {"pair": f"{c.i}{c.j}", "kind": c.kind.value, "t0": c.t0, "tinf": c.tinf}
                for c in couplings
            ],
            "epsilon": couplings[0].epsilon if couplings else None,
            "warnings": list(vertex_class.warnings),
        }
        typer.echo(json.dumps(report, indent=2))
        return
    ui.print_vertex_class(vertex_class)
    ui.print_couplings(couplings)


@app.command()
def design(
    spec_path: Path = typer.Argument(..., help="Filter request JSON file"),
    out: Path = typer.Option(..., "--out", "-o", help="Vertex JSON file to write"),
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
    epsilon: Optional[float] = typer.Option(
        None, "--epsilon", "-e", help="Override the recipe's smallness threshold"
    ),
) -> None:
    """Design a three-line branching filter from per-pair high/low pass requests."""
    try:
        spec = load_filter_spec(spec_path)
        if epsilon is not None:
            spec = replace(spec, epsilon=epsilon)
        result = design_branching_filter(spec)
        write_json(dump_vertex(result.pair), out, force=force)
    except (QVertexError, FileExistsError) as e:
        raise _fail(e) from None
    ui.print_design(result)
    ui.print_success(f"wrote {out}")


@app.command()
def presets(
    name: Optional[str] = typer.Argument(None, help="Preset to export"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the preset as JSON"),
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
) -> None:
    """List the figure presets, or export one as a vertex JSON file."""
    if name is None:
        ui.print_presets(PRESETS.values())
        return
    try:
        preset = get_preset(name)
        document = dump_case(preset.case)
        if out is None:
            typer.echo(json.dumps(document, indent=2))
            return
        write_json(document, out, force=force)
    except (QVertexError, FileExistsError) as e:
        raise _fail(e) from None
    ui.print_success(f"wrote {out}")


@app.command()
def version() -> None:
    """Show version information."""
    ui.console.print(f"qvertex v{__version__}")


def main():
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
