"""
    Command line interface: evaluates and tabulates the polynomials, runs the verification suite and lists
    the families and checks.

    .. code-block:: console

        $ askeyscheme eval --family legendre --n 2 --x 0.5
        $ askeyscheme eval --family q-laguerre --alpha 0.5 --q 0.5 --n 1 --x -1
        $ askeyscheme tabulate --family hermite --degree 2 --x 0 --format csv
        $ askeyscheme verify --suite limits --group classical --deterministic --format json
        $ askeyscheme verify --suite limits --chapter 2
        $ askeyscheme list-families

    Family parameters are given as ``--name value`` (or ``--param name=value``) and checked against the
    family's schema. The exit status is 0 on success, 1 if a verification check fails, 2 on usage errors
    and 3 on numeric errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple
from typing_extensions import Final, Literal

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from .. import __version__
from ..qcore import Number, NumericError
from ..hyper import residual
from ..families import get_descriptor, eval_recurrence, eval_series_path, table as family_table
from ..measures import QuadratureConfig
from ..verify import SuiteConfig, SuiteFilter, SuiteModules, CheckKinds, LimitGroups, plan, run_suite, coverage

_logger = logging.getLogger(__name__)

OutputFormat = Literal["json", "csv", "pretty"]
"""
    Literal type for the output formats.
"""

OutputFormats: Final = ("json", "csv", "pretty")

EXIT_OK: Final[int] = 0
EXIT_FAILURE: Final[int] = 1
EXIT_USAGE: Final[int] = 2
EXIT_NUMERIC: Final[int] = 3

DEFAULT_SEED: Final[int] = 42

CHAPTER_GROUPS: Final = {2: "classical", 4: "basic", 5: "q-limit"}
"""
    The limit relation group selected by each ``--chapter`` number.
"""

_QUADRATURE_FLAGS: Final = (("panel-order", int), ("rel-tol", float), ("abs-tol", float), ("max-panels", int),
                            ("tail-tol", float), ("tail-run", int), ("max-terms", int), ("max-doublings", int))


class UsageError(Exception):
    """ Class for command line usage errors, mapped to exit status 2. """


class CliConfig(NamedTuple):
    """
        The parsed command line configuration.
    """

    subcommand: str
    """ The subcommand. """

    family: Optional[str] = None
    """ The family name, for ``eval`` and ``tabulate``. """

    params: Dict[str, Any] = {}
    """ Family parameter assignments. """

    n: int = 0
    """ The degree, for ``eval``; the highest degree, for ``tabulate``. """

    points: Tuple[complex, ...] = ()
    """ The sample points. """

    lattice: bool = False
    """ Whether the points are values of the natural variable. """

    flt: SuiteFilter = SuiteFilter()
    """ The check filter, for ``verify`` and ``list-checks``. """

    suite: SuiteConfig = SuiteConfig()
    """ The suite configuration, for ``verify``. """

    fmt: str = "pretty"
    """ The output format. """

    output: Optional[str] = None
    """ The output path, standard output if not given. """

    coverage: bool = False
    """ Whether ``list-checks`` reports catalog coverage instead of the checks. """


def format_number(z: Number) -> str:
    """
        Formats a number as ``"re+imi"``, with '.' as decimal separator.

        >>> format_number(-0.125)
        '-0.125+0.0i'
        >>> format_number(complex(1, -2))
        '1.0-2.0i'
    """
    zc = complex(z)
    sign = "-" if zc.imag < 0 or (zc.imag == 0 and str(zc.imag).startswith("-")) else "+"
    return f"{zc.real!r}{sign}{abs(zc.imag)!r}i"

def parse_number(text: str) -> Number:
    """
        Parses an integer, real or complex value from the command line.

        >>> parse_number("6"), parse_number("0.5"), parse_number("1+2j")
        (6, 0.5, (1+2j))

        :raises UsageError: if the text is not a number
    """
    for kind in (int, float, complex):
        try:
            return kind(text) # type: ignore[operator, no-any-return]
        except ValueError:
            continue
    raise UsageError(f"Invalid numeric value {text!r}.")

def parse_params(extras: Sequence[str], assignments: Sequence[str] = ()) -> Dict[str, Any]:
    """
        Parses family parameter assignments, given as ``--name value``, ``--name=value`` or ``name=value``.

        >>> parse_params(["--alpha", "0.5", "--q=0.5"], ["N=6"])
        {'alpha': 0.5, 'q': 0.5, 'N': 6}

        :raises UsageError: if an assignment is malformed
    """
    res: Dict[str, Any] = {}
    tokens = list(extras)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not token.startswith("--") or len(token) == 2:
            raise UsageError(f"Unexpected argument {token!r}.")
        name = token[2:]
        if "=" in name:
            name, value = name.split("=", 1)
            i += 1
        else:
            if i+1 >= len(tokens):
                raise UsageError(f"Missing value for parameter {name!r}.")
            value = tokens[i+1]
            i += 2
        res[name] = parse_number(value)
    for assignment in assignments:
        if "=" not in assignment:
            raise UsageError(f"Parameter assignment {assignment!r} must have the form name=value.")
        name, value = assignment.split("=", 1)
        res[name.strip()] = parse_number(value.strip())
    return res

def _split(values: Optional[Sequence[str]]) -> Optional[Tuple[str, ...]]:
    if not values:
        return None
    return tuple(v.strip() for value in values for v in value.split(",") if v.strip())

def _groups(groups: Optional[Sequence[str]], chapters: Optional[Sequence[int]]) -> Optional[Tuple[str, ...]]:
    named = _split(groups) or ()
    extra = tuple(CHAPTER_GROUPS[c] for c in chapters or () if CHAPTER_GROUPS[c] not in named)
    selected = named+tuple(dict.fromkeys(extra))
    return selected or None


def build_parser() -> argparse.ArgumentParser:
    """
        The argument parser. Family parameters are not declared: they are collected from the unknown arguments.
    """
    parser = argparse.ArgumentParser(prog="askeyscheme", allow_abbrev=False,
                                     description="Hypergeometric orthogonal polynomials and their q-analogues: "
                                                 "evaluation, tabulation and numerical verification.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress (twice for debug output)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=OutputFormats, default="pretty", dest="fmt", help="output format")
        p.add_argument("--output", "-o", default=None, help="output path (default: standard output)")

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", "-f", required=True, help="family name, e.g. continuous-dual-q-hahn")
        p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                       help="family parameter assignment (also accepted as --NAME VALUE)")
        p.add_argument("--lattice", action="store_true",
                       help="points are values of the natural variable rather than arguments")

    p_eval = sub.add_parser("eval", allow_abbrev=False, help="evaluate p_n(x) by series and by recurrence")
    family_args(p_eval)
    p_eval.add_argument("--n", type=int, required=True, help="degree")
    p_eval.add_argument("--x", nargs="+", required=True, metavar="X", help="argument(s)")
    common(p_eval)

    p_tab = sub.add_parser("tabulate", allow_abbrev=False, help="tabulate p_0, ..., p_degree over a grid")
    family_args(p_tab)
    p_tab.add_argument("--degree", type=int, required=True, help="highest degree")
    grid = p_tab.add_mutually_exclusive_group(required=True)
    grid.add_argument("--x", nargs="+", metavar="X", help="argument(s)")
    grid.add_argument("--grid", nargs=3, metavar=("LO", "HI", "COUNT"), help="equally spaced grid, endpoints included")
    common(p_tab)

    def filter_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--suite", action="append", metavar="MODULE",
                       help=f"suite modules, comma separated: {', '.join(SuiteModules)}")
        p.add_argument("--family", action="append", dest="families", metavar="FAMILY",
                       help="families involved in the checks, comma separated")
        p.add_argument("--checks", action="append", metavar="KIND",
                       help=f"check kinds, comma separated: {', '.join(CheckKinds)}")
        p.add_argument("--group", action="append", metavar="GROUP",
                       help=f"limit relation groups, comma separated: {', '.join(LimitGroups)}")
        p.add_argument("--chapter", action="append", type=int, choices=sorted(CHAPTER_GROUPS), metavar="CHAPTER",
                       help="limit relation groups by chapter: 2 classical, 4 basic, 5 q -> 1")
        p.add_argument("--id", action="append", dest="ids", metavar="ID", help="check ids, comma separated")

    p_verify = sub.add_parser("verify", allow_abbrev=False, help="run the verification suite")
    filter_args(p_verify)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the parameter draws")
    p_verify.add_argument("--draws", type=int, default=None, help="parameter draws per identity")
    p_verify.add_argument("--schedule", nargs="+", type=float, default=None, metavar="S",
                          help="overrides the schedules of the limit relations")
    p_verify.add_argument("--limit-tol", type=float, default=None, help="overrides the limit relation thresholds")
    p_verify.add_argument("--workers", type=int, default=1, help="number of worker threads")
    p_verify.add_argument("--deterministic", action="store_true", help="zero timings and omit the timestamp")
    for flag, kind in _QUADRATURE_FLAGS:
        p_verify.add_argument(f"--{flag}", type=kind, default=None, help=f"quadrature setting {flag.replace('-', '_')}")
    common(p_verify)

    p_checks = sub.add_parser("list-checks", allow_abbrev=False, help="list the checks selected by a filter")
    filter_args(p_checks)
    p_checks.add_argument("--coverage", action="store_true", help="list catalog coverage by check kind instead")
    common(p_checks)

    p_fams = sub.add_parser("list-families", allow_abbrev=False, help="list the families and their parameters")
    common(p_fams)
    return parser

def _points(args: argparse.Namespace) -> Tuple[complex, ...]:
    grid = getattr(args, "grid", None)
    if grid is not None:
        lo, hi, count = complex(parse_number(grid[0])), complex(parse_number(grid[1])), parse_number(grid[2])
        if not isinstance(count, int) or count < 1:
            raise UsageError(f"Grid count must be a positive integer, found {grid[2]!r}.")
        if count == 1:
            return (lo,)
        return tuple(lo+(hi-lo)*k/(count-1) for k in range(count))
    return tuple(complex(parse_number(x)) for x in args.x)

def _quadrature(args: argparse.Namespace) -> Optional[QuadratureConfig]:
    fields = {flag.replace("-", "_"): getattr(args, flag.replace("-", "_")) for flag, _ in _QUADRATURE_FLAGS}
    given = {k: v for k, v in fields.items() if v is not None}
    return QuadratureConfig.default().replace(**given) if given else None

def make_config(args: argparse.Namespace, extras: Sequence[str]) -> CliConfig:
    """
        Builds the configuration from parsed arguments and the unrecognized ``--name value`` arguments.

        :raises UsageError: if the arguments are malformed, or family parameters are given to other subcommands
    """
    cmd = args.subcommand
    if cmd in ("eval", "tabulate"):
        params = parse_params(extras, args.param)
        n = args.n if cmd == "eval" else args.degree
        if n < 0:
            raise UsageError(f"Degree must be non-negative, found {n}.")
        return CliConfig(cmd, args.family, params, n, _points(args), args.lattice, fmt=args.fmt, output=args.output)
    if extras:
        raise UsageError(f"Unrecognized arguments: {' '.join(extras)}")
    if cmd in ("verify", "list-checks"):
        flt = SuiteFilter(_split(args.suite), _split(args.families), _split(args.checks),
                          _split(args.ids), _groups(args.group, args.chapter))
        if cmd == "list-checks":
            return CliConfig(cmd, flt=flt, fmt=args.fmt, output=args.output, coverage=args.coverage)
        defaults = SuiteConfig()
        suite = SuiteConfig(seed=args.seed,
                            identity_draws=defaults.identity_draws if args.draws is None else args.draws,
                            quadrature=_quadrature(args),
                            schedule=None if args.schedule is None else tuple(args.schedule),
                            limit_tol=args.limit_tol, workers=args.workers, deterministic=args.deterministic)
        return CliConfig(cmd, flt=flt, suite=suite, fmt=args.fmt, output=args.output)
    return CliConfig(cmd, fmt=args.fmt, output=args.output)


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text if text.endswith("\n") else text+"\n")
        return
    with open(cfg.output, "w", encoding="utf8", newline="") as f:
        f.write(text)
    _logger.info("Output written to %s", cfg.output)

def _emit_table(cfg: CliConfig, title: str, columns: Sequence[str], rows: Sequence[Sequence[str]],
                footer: Optional[str] = None, styles: Optional[Sequence[Optional[str]]] = None) -> None:
    console = Console(record=True, width=120)
    table = Table(title=title)
    for i, col in enumerate(columns):
        table.add_column(col, style="bold green" if i == 0 else None)
    for i, row in enumerate(rows):
        table.add_row(*(escape(cell) for cell in row), style=None if styles is None else styles[i])
    console.print(table)
    if footer is not None:
        console.print(Panel(footer))
    if cfg.output is not None:
        console.save_text(cfg.output)

def _emit_rows(cfg: CliConfig, title: str, columns: Sequence[str], rows: Sequence[Sequence[str]],
               doc: Dict[str, Any], footer: Optional[str] = None) -> None:
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(doc, indent=2))
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        _emit(cfg, buf.getvalue())
    else:
        _emit_table(cfg, title, columns, rows, footer)


def cmd_eval(cfg: CliConfig) -> int:
    """
        Evaluates :math:`p_n(x)` by the series definition and by the recurrence, with their deviation.

        :raises KeyError: if the family does not exist
        :raises ValueError: if parameters are not in the family's schema
        :raises NumericError: if the evaluation fails
    """
    assert cfg.family is not None
    desc = get_descriptor(cfg.family)
    p = desc.prepare(cfg.params)
    records: List[Dict[str, Any]] = []
    for x in cfg.points:
        arg = desc.variable.inverse(p, x) if cfg.lattice else x
        series = eval_series_path(desc, p, cfg.n, arg)
        rec = eval_recurrence(desc, p, cfg.n, arg)
        records.append({"x": format_number(x), "series": format_number(series.value),
                        "recurrence": format_number(rec), "deviation": residual(series.value, rec),
                        "path": series.path})
    columns = ("x", "series", "recurrence", "deviation", "path")
    rows = [(r["x"], r["series"], r["recurrence"], f"{r['deviation']:.3e}", r["path"]) for r in records]
    doc = {"family": desc.name, "params": {k: format_number(v) if isinstance(v, complex) else v for k, v in p.items()},
           "n": cfg.n, "values": records}
    _emit_rows(cfg, f"{desc.title}, n = {cfg.n}", columns, rows, doc)
    return EXIT_OK

def cmd_tabulate(cfg: CliConfig) -> int:
    """
        Tabulates :math:`p_0, \\ldots, p_N` over the sample points, one row per point and one column per degree.

        :raises KeyError: if the family does not exist
        :raises ValueError: if parameters are not in the family's schema
        :raises NumericError: if the evaluation fails, or the degree exceeds the family's bound
    """
    assert cfg.family is not None
    desc = get_descriptor(cfg.family)
    p = desc.prepare(cfg.params)
    columns = ["x"]+[f"p{n}" for n in range(cfg.n+1)]
    rows: List[List[str]] = []
    for x in cfg.points:
        arg = desc.variable.inverse(p, x) if cfg.lattice else x
        rows.append([format_number(x)]+[format_number(eval_series_path(desc, p, n, arg).value)
                                        for n in range(cfg.n+1)])
    doc = {"family": desc.name, "params": {k: format_number(v) if isinstance(v, complex) else v for k, v in p.items()},
           "degree": cfg.n, "columns": columns, "rows": rows}
    _emit_rows(cfg, desc.title, columns, rows, doc)
    return EXIT_OK

def cmd_verify(cfg: CliConfig) -> int:
    """
        Runs the verification suite, exiting with status 1 if any check fails.

        :raises KeyError: if the filter names an unknown family, or ids matching no check
        :raises ValueError: if the filter names an unknown module, check kind or limit group
    """
    report = run_suite(cfg.flt, cfg.suite)
    if cfg.fmt == "json":
        _emit(cfg, report.to_json())
    elif cfg.fmt == "csv":
        _emit(cfg, report.to_csv())
    else:
        rows = [(c.id, c.family, f"{c.residual:.3e}", f"{c.threshold:.1e}",
                 "pass" if c.passed else "FAIL", f"{c.millis:.1f}") for c in report.checks]
        styles = [None if c.passed else "red" for c in report.checks]
        footer = f"{len(report.checks)-len(report.failures)} of {len(report.checks)} checks passed"
        _emit_table(cfg, "Verification suite", ("id", "family", "residual", "threshold", "pass", "millis"),
                    rows, footer, styles)
    return EXIT_OK if report.passed else EXIT_FAILURE

def cmd_list_checks(cfg: CliConfig) -> int:
    """
        Lists the checks selected by the filter, or the catalog coverage by check kind.
    """
    checks = plan(cfg.flt)
    if cfg.coverage:
        cov = coverage(checks)
        rows = [(kind, str(planned), str(total)) for kind, (planned, total) in cov.items()]
        doc = {kind: {"planned": planned, "catalog": total} for kind, (planned, total) in cov.items()}
        _emit_rows(cfg, "Catalog coverage", ("kind", "planned", "catalog"), rows, doc)
        return EXIT_OK
    rows = [(c.id, c.kind, c.family) for c in checks]
    doc = {"total": len(checks), "checks": [{"id": c.id, "kind": c.kind, "family": c.family} for c in checks]}
    _emit_rows(cfg, "Checks", ("id", "kind", "family"), rows, doc, f"{len(checks)} checks")
    return EXIT_OK

def cmd_list_families(cfg: CliConfig) -> int:
    """
        Lists the families with their group, parameters, natural variable and norm.
    """
    rows = [(d.name, d.title, d.group, " ".join(d.param_names) or "-", d.variable.kind, d.norm_formula)
            for d in family_table()]
    doc = {"families": [{"name": r[0], "title": r[1], "group": r[2], "params": list(d.param_names),
                         "variable": r[4], "norm": r[5]} for r, d in zip(rows, family_table())]}
    _emit_rows(cfg, "Families", ("name", "title", "group", "params", "variable", "norm"), rows, doc)
    return EXIT_OK

_COMMANDS: Final = {
    "eval": cmd_eval,
    "tabulate": cmd_tabulate,
    "verify": cmd_verify,
    "list-checks": cmd_list_checks,
    "list-families": cmd_list_families,
}

def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]",
                        handlers=[RichHandler(console=Console(stderr=True), show_path=False)])

def main(argv: Optional[Sequence[str]] = None) -> int:
    """
        Entry point of the ``askeyscheme`` command, returning the exit status.
    """
    parser = build_parser()
    try:
        args, extras = parser.parse_known_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _setup_logging(args.verbose)
    err_console = Console(stderr=True)
    try:
        cfg = make_config(args, extras)
        return _COMMANDS[cfg.subcommand](cfg)
    except UsageError as e:
        err_console.print(f"[red]usage error:[/red] {e}")
        return EXIT_USAGE
    except NumericError as e:
        err_console.print(f"[red]numeric error:[/red] {type(e).__name__}: {e}")
        return EXIT_NUMERIC
    except (KeyError, ValueError) as e:
        err_console.print(f"[red]usage error:[/red] {e}")
        return EXIT_USAGE
