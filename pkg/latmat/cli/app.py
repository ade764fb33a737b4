"""Main CLI application using Typer."""

import math
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from pathlib import Path

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from ..constants import (
    EXIT_INPUT_ERROR,
    EXIT_SINGULAR,
    INEQUALITY_CLASSES,
    SUCCESS_MESSAGES,
)
from ..enumeration import (
    enumerate_meet_semilattices,
    filter_min_cover,
    get_catalog,
    sufficient_classes,
)
from ..exceptions import LatmatError
from ..invertibility import invertibility_report, max_cover_degree
from ..io import (
    ClassificationModel,
    DiagnosisModel,
    EnumeratedClass,
    EnumerationModel,
    FactorizationModel,
    FormatError,
    InequalityModel,
    MatrixModel,
    PosetModel,
    PosetSummaryModel,
    ReportModel,
    SearchModel,
    ValuedSetModel,
    dump_model,
    load_model,
    load_poset,
    load_valued_set,
    parse_elements,
    parse_params,
    poset_to_dot,
    write_dot,
)
from ..lattice import (
    NotSemimultiplicativeError,
    ValuedSet,
    is_semimultiplicative,
    parse_valuation,
)
from ..lattice.ambient import KIND_DIVISOR
from ..matrices import (
    RationalMatrix,
    cofactor_determinant,
    det_meet_via_convolution,
    determinant,
    factorize_join,
    join_matrix,
    meet_matrix,
)
from ..numtheory import (
    SearchTemplate,
    class_inequality_instance,
    search_singular,
    verify_counterexample,
)
from ..posets import Poset, canonicalize, mobius
from ..utils import setup_logging
from .reproduce import run_checks

app = typer.Typer(
    name="latmat",
    help="Exact meet and join matrices on finite meet semilattices.",
    no_args_is_help=True,
)
poset_app = typer.Typer(help="Validate and draw posets.", no_args_is_help=True)
matrix_app = typer.Typer(help="Build meet and join matrices.", no_args_is_help=True)
counterexample_app = typer.Typer(
    help="Singular LCM matrices on gcd-closed sets.", no_args_is_help=True
)
app.add_typer(poset_app, name="poset")
app.add_typer(matrix_app, name="matrix")
app.add_typer(counterexample_app, name="counterexample")

console = Console()
err_console = Console(stderr=True)


class Route(str, Enum):
    ELIMINATION = "elimination"
    CONVOLUTION = "convolution"
    COFACTOR = "cofactor"


class MatrixKind(str, Enum):
    JOIN = "join"
    MEET = "meet"


@contextmanager
def input_errors() -> Iterator[None]:
    """Report bad input on stderr and exit with the input error code."""
    try:
        yield
    except (LatmatError, ValueError, IndexError, ZeroDivisionError) as e:
        err_console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR) from e


def _emit(model: BaseModel) -> None:
    typer.echo(dump_model(model))


def _set_option() -> Path | None:
    return typer.Option(None, "--set", "-s", help="Valued set JSON file")


def _elements_option() -> str | None:
    return typer.Option(
        None, "--elements", "-e", help="Comma-separated divisor set, e.g. 1,2,3"
    )


def _f_option() -> str:
    return typer.Option("N", "--f", help="Valuation for --elements (N, phi, sigma, ...)")


def _pretty_option() -> bool:
    return typer.Option(False, "--pretty", "-p", help="Render a table instead of JSON")


def _load_set(set_file: Path | None, elements: str | None, f: str) -> ValuedSet:
    if set_file is not None and elements is None:
        return load_valued_set(set_file)
    if elements is not None and set_file is None:
        return ValuedSet.divisor(parse_elements(elements), parse_valuation(f))
    raise FormatError("set source", "pass exactly one of --set and --elements")


def _print_matrix(title: str, matrix: RationalMatrix, labels: Sequence[str]) -> None:
    table = Table(title=title)
    table.add_column("", style="cyan")
    for label in labels:
        table.add_column(label, justify="right")
    for label, row in zip(labels, matrix.to_strings(), strict=True):
        table.add_row(label, *row)
    console.print(table)


def _print_fields(title: str, rows: Sequence[tuple[str, object]]) -> None:
    table = Table(title=title)
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green")
    for name, value in rows:
        table.add_row(name, "-" if value is None else str(value))
    console.print(table)


def _join_det_via_convolution(vs: ValuedSet) -> Fraction:
    """det [S]_f = (prod f(x_i))^2 det (S)_{1/f} for semimultiplicative f."""
    check = is_semimultiplicative(vs.ambient, vs.f, vs.elements)
    if check.witness is not None:
        raise NotSemimultiplicativeError(check.witness)
    product = math.prod(vs.values(), start=Fraction(1))
    return product * product * det_meet_via_convolution(vs, vs.f.reciprocal()).determinant


@poset_app.command("validate")
def poset_validate(
    path: Path = typer.Argument(..., help="Poset JSON file"),
    pretty: bool = _pretty_option(),
):
    """Check a poset file and summarize it."""
    setup_logging()

    with input_errors():
        poset = load_poset(path)

    if pretty:
        console.print(f"[green]✓[/green] {SUCCESS_MESSAGES['poset_valid'].format(n=poset.n)}")
        return
    _emit(PosetSummaryModel.from_poset(poset))


@poset_app.command("show")
def poset_show(
    path: Path = typer.Argument(..., help="Poset JSON file"),
    dot: bool = typer.Option(False, "--dot", help="Print the Hasse diagram as DOT"),
    pretty: bool = _pretty_option(),
):
    """Print a poset as JSON, a table or a DOT Hasse diagram."""
    setup_logging()

    with input_errors():
        poset = load_poset(path)

    if dot:
        typer.echo(poset_to_dot(poset))
    elif pretty:
        table = Table(title=f"Poset with {poset.n} elements")
        table.add_column("Index", style="cyan")
        table.add_column("Label", style="green")
        table.add_column("Height", style="yellow")
        table.add_column("Lower covers", style="magenta")
        for i in range(poset.n):
            table.add_row(
                str(i),
                poset.label(i),
                str(poset.height(i)),
                ", ".join(str(k) for k in sorted(poset.lower_covers(i))) or "-",
            )
        console.print(table)
    else:
        _emit(PosetModel.from_poset(poset))


@app.command("mobius")
def mobius_command(
    path: Path = typer.Argument(..., help="Poset JSON file"),
    pretty: bool = _pretty_option(),
):
    """Print the Mobius function mu(x_i, x_j) of a poset."""
    setup_logging()

    with input_errors():
        poset = load_poset(path)
        matrix = RationalMatrix.from_rows(mobius(poset).values)

    if pretty:
        _print_matrix("Mobius function", matrix, [poset.label(i) for i in range(poset.n)])
    else:
        _emit(MatrixModel.from_matrix(matrix))


def _matrix_command(kind: MatrixKind, vs: ValuedSet, pretty: bool) -> None:
    matrix = join_matrix(vs) if kind is MatrixKind.JOIN else meet_matrix(vs)
    if pretty:
        _print_matrix(f"{kind.value} matrix, f = {vs.f.describe()}", matrix, vs.labels())
    else:
        _emit(MatrixModel.from_matrix(matrix))


@matrix_app.command("meet")
def matrix_meet(
    set_file: Path | None = _set_option(),
    elements: str | None = _elements_option(),
    f: str = _f_option(),
    pretty: bool = _pretty_option(),
):
    """Print the meet matrix (S)_f, the GCD matrix for f = N."""
    setup_logging()

    with input_errors():
        vs = _load_set(set_file, elements, f)
        _matrix_command(MatrixKind.MEET, vs, pretty)


@matrix_app.command("join")
def matrix_join(
    set_file: Path | None = _set_option(),
    elements: str | None = _elements_option(),
    f: str = _f_option(),
    pretty: bool = _pretty_option(),
):
    """Print the join matrix [S]_f, the LCM matrix for f = N."""
    setup_logging()

    with input_errors():
        vs = _load_set(set_file, elements, f)
        _matrix_command(MatrixKind.JOIN, vs, pretty)


@app.command("det")
def det_command(
    set_file: Path | None = _set_option(),
    elements: str | None = _elements_option(),
    f: str = _f_option(),
    via: Route = typer.Option(Route.ELIMINATION, "--via", help="Determinant route"),
    kind: MatrixKind = typer.Option(MatrixKind.JOIN, "--matrix", help="join or meet"),
    pretty: bool = _pretty_option(),
):
    """Print the exact determinant of the join (default) or meet matrix."""
    setup_logging()

    with input_errors():
        vs = _load_set(set_file, elements, f)
        matrix = join_matrix(vs) if kind is MatrixKind.JOIN else meet_matrix(vs)
        if via is Route.ELIMINATION:
            value = determinant(matrix)
        elif via is Route.COFACTOR:
            value = cofactor_determinant(matrix)
        elif kind is MatrixKind.JOIN:
            value = _join_det_via_convolution(vs)
        else:
            value = det_meet_via_convolution(vs, vs.f).determinant

    if pretty:
        _print_fields(
            f"Determinant of the {kind.value} matrix",
            [
                ("Elements", ", ".join(vs.labels())),
                ("f", vs.f.describe()),
                ("Route", via.value),
                ("Determinant", value),
                ("Invertible", "yes" if value != 0 else "no"),
            ],
        )
    else:
        typer.echo(str(value))


@app.command("factorize")
def factorize_command(
    set_file: Path | None = _set_option(),
    elements: str | None = _elements_option(),
    f: str = _f_option(),
    pretty: bool = _pretty_option(),
):
    """Factor [S]_f as delta (S)_{1/f} delta."""
    setup_logging()

    with input_errors():
        vs = _load_set(set_file, elements, f)
        factorization = factorize_join(vs)

    if pretty:
        console.print(
            "delta = diag(" + ", ".join(str(d) for d in factorization.delta) + ")"
        )
        _print_matrix(
            f"meet matrix, f = 1/({vs.f.describe()})", factorization.core, vs.labels()
        )
    else:
        _emit(FactorizationModel.from_factorization(factorization))


@app.command("invertibility")
def invertibility_command(
    set_file: Path | None = _set_option(),
    elements: str | None = _elements_option(),
    f: str = _f_option(),
    meet_only: bool = typer.Option(
        False, "--meet-only", help="Allow f that is not semimultiplicative on S"
    ),
    pretty: bool = _pretty_option(),
):
    """Run the inductive invertibility method; exit 1 when singular."""
    setup_logging()

    with input_errors():
        vs = _load_set(set_file, elements, f)
        report = invertibility_report(vs, require_join=not meet_only)

    if pretty:
        table = Table(title=f"Invertibility ({report.scope})")
        table.add_column("Step", style="cyan")
        table.add_column("Element", style="green")
        table.add_column("m", style="yellow")
        table.add_column("Covered", style="magenta")
        table.add_column("c", justify="right")
        table.add_column("Passed")
        for step in report.steps:
            table.add_row(
                str(step.i),
                vs.ambient.format_element(step.element),
                str(step.m),
                ", ".join(str(k) for k in step.covered) or "-",
                str(step.condition_value),
                "[green]✓[/green]" if step.passed else "[red]✗[/red]",
            )
        console.print(table)
        if report.invertible:
            console.print(f"[green]{SUCCESS_MESSAGES['invertible']}[/green]")
        else:
            console.print(f"[red]Singular: step {report.first_failure} fails[/red]")
    else:
        _emit(ReportModel.from_report(report, vs.ambient))

    if not report.invertible:
        raise typer.Exit(EXIT_SINGULAR)


@app.command("enumerate")
def enumerate_command(
    n: int = typer.Option(..., "--n", help="Number of elements"),
    min_cover: int | None = typer.Option(
        None, "--min-cover", help="Keep classes with an element covering at least K"
    ),
    count_only: bool = typer.Option(False, "--count-only", help="Print only the count"),
    dot_dir: Path | None = typer.Option(
        None, "--dot-dir", help="Write one DOT Hasse diagram per class here"
    ),
    threads: int | None = typer.Option(None, "--threads", "-t", help="Worker processes"),
):
    """Enumerate meet semilattices up to isomorphism."""
    setup_logging()

    with input_errors():
        semis = enumerate_meet_semilattices(n, threads=threads)
        if min_cover is not None:
            semis = filter_min_cover(semis, min_cover)

    if count_only:
        typer.echo(str(len(semis)))
        return

    catalog = get_catalog()
    classes = []
    for index, poset in enumerate(semis):
        label = catalog.classify(poset)
        classes.append(
            EnumeratedClass(
                key=canonicalize(poset).hex(),
                label=label,
                poset=PosetModel.from_poset(poset),
            )
        )
        if dot_dir is not None:
            dot_dir.mkdir(parents=True, exist_ok=True)
            write_dot(poset, dot_dir / f"n{n}_{index:03d}.dot")

    _emit(EnumerationModel(n=n, min_cover=min_cover, count=len(semis), classes=classes))


def _classification(poset: Poset) -> ClassificationModel:
    catalog = get_catalog()
    label = catalog.classify(poset)
    requires = sufficient_classes(poset)
    entry = catalog[label] if label is not None else None
    return ClassificationModel(
        key=canonicalize(poset).hex(),
        label=label,
        figure=entry.figure if entry is not None else None,
        family=entry.family if entry is not None else None,
        requires=list(requires) if requires is not None else None,
        largest_cover=max_cover_degree(poset),
    )


@app.command("classify")
def classify_command(
    path: Path = typer.Argument(..., help="Poset JSON file"),
    pretty: bool = _pretty_option(),
):
    """Name the catalog class of a meet semilattice."""
    setup_logging()

    with input_errors():
        poset = load_poset(path)
        model = _classification(poset)

    if pretty:
        _print_fields(
            f"Classification of a {poset.n}-element poset",
            [
                ("Class", model.label),
                ("Figure", model.figure),
                ("Family", model.family),
                ("Sufficient classes", ", ".join(model.requires) if model.requires else None),
                ("Largest cover count", model.largest_cover),
            ],
        )
    else:
        _emit(model)


@counterexample_app.command("verify")
def counterexample_verify(
    elements: str | None = _elements_option(),
    set_file: Path | None = _set_option(),
    pretty: bool = _pretty_option(),
):
    """Diagnose the LCM matrix of a set of integers; exit 1 when singular."""
    setup_logging()

    with input_errors():
        if set_file is not None and elements is None:
            model = load_model(set_file, ValuedSetModel)
            if model.ambient != KIND_DIVISOR or not model.elements:
                raise FormatError("counterexample set", "expected divisor elements")
            ints = parse_elements(",".join(model.elements))
        elif elements is not None and set_file is None:
            ints = parse_elements(elements)
        else:
            raise FormatError("set source", "pass exactly one of --set and --elements")
        diagnosis = verify_counterexample(ints)

    if pretty:
        report = diagnosis.report
        _print_fields(
            "LCM matrix diagnosis",
            [
                ("Elements", ", ".join(str(x) for x in diagnosis.elements)),
                ("gcd-closed", "yes" if diagnosis.gcd_closed else "no"),
                ("Class", diagnosis.label),
                ("Determinant", diagnosis.det),
                ("Determinant via conditions", diagnosis.det_via_conditions),
                ("First failing step", report.first_failure if report is not None else None),
            ],
        )
        if diagnosis.singular:
            console.print("[red]Singular LCM matrix[/red]")
        else:
            console.print(f"[green]{SUCCESS_MESSAGES['invertible']}[/green]")
    else:
        _emit(DiagnosisModel.from_diagnosis(diagnosis))
    if diagnosis.singular:
        raise typer.Exit(EXIT_SINGULAR)


@counterexample_app.command("search")
def counterexample_search(
    template: str = typer.Option("s38", "--template", help="Search template"),
    bound: int = typer.Option(60, "--bound", "-b", help="Largest multiplier"),
    limit: int = typer.Option(10, "--limit", "-l", help="Stop after this many hits"),
    atoms: str = typer.Option("2,3,5", "--atoms", help="Pairwise coprime atoms"),
    pad: int = typer.Option(0, "--pad", help="Chain elements appended to each hit"),
    threads: int | None = typer.Option(None, "--threads", "-t", help="Worker processes"),
    pretty: bool = _pretty_option(),
):
    """Search gcd-closed sets with singular LCM matrix; exit 1 when found."""
    setup_logging()

    with input_errors():
        p, q, r = parse_elements(atoms)
        search = SearchTemplate(name=template, atoms=(p, q, r), bound=bound, pad=pad)
        hits = search_singular(search, limit, threads)

    if pretty:
        table = Table(title=f"Search {search.name} for {search.target}, bound {bound}")
        table.add_column("#", style="cyan")
        table.add_column("Elements", style="green")
        for index, found in enumerate(hits, start=1):
            table.add_row(str(index), ", ".join(str(x) for x in found))
        console.print(table)
        console.print(f"{len(hits)} singular sets found")
    else:
        _emit(
            SearchModel(
                template=search.name,
                target=search.target,
                bound=bound,
                limit=limit,
                hits=[[str(x) for x in found] for found in hits],
            )
        )
    if hits:
        raise typer.Exit(EXIT_SINGULAR)


@app.command("inequality")
def inequality_command(
    cls: str = typer.Option(..., "--class", help=f"One of {', '.join(INEQUALITY_CLASSES)}"),
    params: str = typer.Option(..., "--params", help="Parameters, e.g. a=2,b=3,c=2,d=5"),
    top: int | None = typer.Option(None, "--top", help="Top element, a multiple of the lcm"),
    x1: int = typer.Option(1, "--x1", help="Bottom element"),
    strict: bool = typer.Option(
        False, "--strict", help="Also require the gcd-closed shape of the class"
    ),
    pretty: bool = _pretty_option(),
):
    """Evaluate the last condition value of a class-membership inequality."""
    setup_logging()

    with input_errors():
        instance = class_inequality_instance(
            cls, parse_params(params), top, x1, strict=strict
        )

    if pretty:
        _print_fields(
            f"Inequality for {INEQUALITY_CLASSES[cls]}",
            [
                ("Parameters", ", ".join(f"{k}={v}" for k, v in instance.params)),
                ("Elements", ", ".join(str(x) for x in instance.elements)),
                ("Last condition value", instance.value),
                ("Positive", "yes" if instance.positive else "no"),
            ],
        )
    else:
        _emit(InequalityModel.from_instance(instance, INEQUALITY_CLASSES[cls]))


@app.command("reproduce-paper")
def reproduce_paper(
    full: bool = typer.Option(False, "--full", help="Include the n=7 enumeration"),
    threads: int | None = typer.Option(None, "--threads", "-t", help="Worker processes"),
):
    """Re-run every reproduced count, counterexample and Mobius vector."""
    setup_logging()

    checks = run_checks(full, threads)

    table = Table(title="Reproduced results")
    table.add_column("Check", style="cyan")
    table.add_column("Expected", style="green")
    table.add_column("Actual", style="yellow")
    table.add_column("Status")
    for check in checks:
        table.add_row(
            check.name,
            check.expected,
            check.actual,
            "[green]✓ pass[/green]" if check.passed else "[red]✗ fail[/red]",
        )
    console.print(table)

    failed = [check for check in checks if not check.passed]
    if failed:
        console.print(f"[red]{len(failed)} of {len(checks)} checks failed[/red]")
        raise typer.Exit(EXIT_SINGULAR)
    console.print(f"[green]{SUCCESS_MESSAGES['reproduced'].format(count=len(checks))}[/green]")


if __name__ == "__main__":
    app()
