"""Rich terminal output for the qvertex commands."""

from collections.abc import Iterable

from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.theme import Theme

from .filters import FilterDesign, PairCoupling, connection_pattern
from .presets import Preset
from .vertex import AdmissibilityReport, VertexClass

THEME = Theme(
    {
        "info": "cyan",
        "warning": "yellow",
        "error": "red bold",
        "success": "green",
        "label": "magenta",
        "path": "magenta",
    }
)

console = Console(theme=THEME)


def print_error(message: str) -> None:
    console.print(f"[error]Error: {escape(message)}[/error]", highlight=False, soft_wrap=True)


def print_success(message: str) -> None:
    console.print(f"[success]{message}[/success]")


def print_warning(message: str) -> None:
    console.print(f"[warning]{escape(message)}[/warning]", highlight=False, soft_wrap=True)


def print_info(message: str) -> None:
    console.print(f"[info]{message}[/info]")


def print_warnings(warnings: Iterable[str]) -> None:
    for message in warnings:
        print_warning(f"warning: {message}")


def print_admissibility(report: AdmissibilityReport) -> None:
    if report.ok:
        print_success(f"admissible (rank margin {report.margin:.3g})")
    else:
        console.print(
            f"[error]not admissible[/error]: {report.condition} condition, "
            f"{escape(report.message)}",
            highlight=False,
        )


def print_vertex_class(vertex_class: VertexClass) -> None:
    label = vertex_class.case_label.value if vertex_class.case_label else "generic"
    console.print(
        f"class: (r_A, r_B, r_S) = {vertex_class.triple}  [label]{label}[/label]",
        highlight=False,
    )
    print_warnings(vertex_class.warnings)


def print_unitarity(residuals: dict[float, float]) -> None:
    table = Table(title="Unitarity max|S†S - I|", show_header=True)
    table.add_column("k", justify="right")
    table.add_column("residual", justify="right")
    for k, residual in residuals.items():
        table.add_row(f"{k:g}", f"{residual:.2e}")
    console.print(table)


def coupling_table(couplings: list[PairCoupling], title: str = "Pair couplings") -> Table:
    table = Table(title=title, show_header=True)
    table.add_column("pair")
    table.add_column("kind")
    table.add_column("filter")
    table.add_column("|T(0)|", justify="right")
    table.add_column("|T(∞)|", justify="right")
    for c in couplings:
        table.add_row(
            f"{c.i}{c.j}",
            f"{c.kind.symbol} ({c.kind.value})",
            c.kind.filter_type,
            f"{c.t0:.6f}",
            f"{c.tinf:.6f}",
        )
    return table


def print_couplings(couplings: list[PairCoupling]) -> None:
    console.print(coupling_table(couplings))
    epsilon = couplings[0].epsilon if couplings else 0.0
    console.print(f"pattern: [label]{connection_pattern(couplings)}[/label] (ε = {epsilon:g})")
    if couplings:
        print_warnings(couplings[0].warnings)


def print_design(design: FilterDesign) -> None:
    console.print(f"recipe: [label]{design.recipe}[/label], line order {design.order}")
    console.print(coupling_table(design.couplings, title="Achieved couplings"))
    console.print(f"pattern: [label]{design.pattern}[/label] (ε = {design.epsilon:g})")
    for report in design.targets:
        i, j = report.pair
        console.print(
            f"target |T{i}{j}|² = {report.target:.4f}, achieved {report.achieved:.4f} "
            f"({report.deviation:+.4f})"
        )
    if design.matches:
        print_success("requested pattern reached")
    else:
        print_warning("requested pattern not reached")


def print_presets(presets: Iterable[Preset]) -> None:
    table = Table(title="Presets", show_header=True)
    table.add_column("name")
    table.add_column("template")
    table.add_column("family")
    table.add_column("parameters")
    for preset in presets:
        label = preset.case.label
        family = label.value if label else "generic"
        table.add_row(preset.name, preset.template, family, preset.caption)
    console.print(table)
