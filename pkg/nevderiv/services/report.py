"""Plain-text and JSON rendering for command line output."""
import json
from typing import Any, Dict, List, Optional, Sequence

from ..models.derivative import DerivativeStack
from ..models.experiment import ExperimentReport
from ..models.solver import ExtremumResult, RootResult
from ..models.table import WindowSpec


def derivative_label(order: int) -> str:
    return "f(x)" if order == 0 else f"f^{order}(x)"


def format_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Left-aligned first column, right-aligned numbers, two spaces between columns"""
    widths = [len(cell) for cell in header]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]

    def line(cells: Sequence[str]) -> str:
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
        return "  ".join([first, *rest]).rstrip()

    return "\n".join([line(header), *(line(row) for row in rows)]) + "\n"


def to_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_stack(stack: DerivativeStack, window: Optional[WindowSpec] = None) -> str:
    lines = [f"x = {stack.at!r}"]
    if window is not None:
        lines.append(f"degree = {window.degree} (samples {window.first_index}..{window.stop - 1})")
    table = format_table(
        ["order", "value"],
        [[str(order), repr(value)] for order, value in enumerate(stack.values)],
    )
    return "\n".join(lines) + "\n" + table


def stack_document(stack: DerivativeStack, window: Optional[WindowSpec] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {"x": stack.at, "values": list(stack.values)}
    if window is not None:
        document["window"] = {"first_index": window.first_index, "degree": window.degree}
    return document


def render_root(result: RootResult) -> str:
    return (
        f"root = {result.x!r}\n"
        f"residual = {result.residual:.3e}\n"
        f"iterations = {result.iterations}\n"
        f"converged = {'yes' if result.converged else 'no'}\n"
    )


def render_extremum(result: ExtremumResult) -> str:
    return (
        f"{result.kind.value} at x = {result.x!r}\n"
        f"value = {result.value!r}\n"
        f"slope = {result.slope:.3e}\n"
        f"curvature = {result.curvature!r}\n"
        f"iterations = {result.iterations}\n"
        f"converged = {'yes' if result.converged else 'no'}\n"
    )


def render_spot_checks(report: ExperimentReport) -> str:
    checks = report.spot_checks
    header = [f"x = {checks[0].at:g}" if checks else "", *(derivative_label(c.order) for c in checks)]
    rows = [
        ["original", *(f"{c.original:.15g}" for c in checks)],
        ["calculated", *(f"{c.calculated:.15g}" for c in checks)],
    ]
    return format_table(header, rows)


def _reference_text(report: ExperimentReport, degree: int, order: int) -> str:
    reference = report.reference_rms(degree, order)
    return "" if reference is None else f"{reference:.1e}"


def render_statistics(report: ExperimentReport) -> str:
    blocks: List[str] = []
    for degree, cells in sorted(report.grid.items()):
        header = ["", "average", "RMS", "maximum"]
        rows = [
            [derivative_label(order), f"{cell.average:.1e}", f"{cell.rms:.1e}", f"{cell.maximum:.1e}"]
            for order, cell in sorted(cells.items())
        ]
        if degree in report.reference:
            header.append("reference RMS")
            for row, order in zip(rows, sorted(cells)):
                row.append(_reference_text(report, degree, order))
        blocks.append(f"degree {degree}, {report.config.sample_count} samples, seed {report.config.seed}\n"
                      + format_table(header, rows))
    return "\n".join(blocks)


def render_rms_grid(report: ExperimentReport) -> str:
    degrees = sorted(report.grid)
    top = max(max(cells) for cells in report.grid.values())
    rows = []
    for order in range(top + 1):
        row = [derivative_label(order)]
        for degree in degrees:
            cell = report.grid[degree].get(order)
            if cell is None:
                row.append("")
                continue
            reference = _reference_text(report, degree, order)
            row.append(f"{cell.rms:.1e} ({reference})" if reference else f"{cell.rms:.1e}")
        rows.append(row)
    title = (
        f"RMS, {report.config.table_points} points, "
        f"{report.config.sample_count} samples, seed {report.config.seed}"
        + (", reference RMS in parentheses" if report.reference else "")
        + "\n"
    )
    return title + format_table(["degree:", *(str(d) for d in degrees)], rows)
