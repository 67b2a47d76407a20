""" Tests for the `askeyscheme.cli` module. """

import json
from pathlib import Path
from typing import Any, List

import pytest
from askeyscheme.cli import main, format_number, parse_number, parse_params, UsageError

def _number(text: str) -> complex:
    return complex(text.replace("i", "j"))

def _json(capsys: Any, argv: List[str]) -> Any:
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)

def test_eval_legendre(capsys: Any) -> None:
    """ :math:`P_2(0.5) = -0.125`, by series and by recurrence. """
    doc = _json(capsys, ["eval", "--family", "legendre", "--n", "2", "--x", "0.5", "--format", "json"])
    assert doc["family"] == "legendre"
    (value,) = doc["values"]
    assert abs(_number(value["series"])+0.125) <= 1e-12
    assert abs(_number(value["recurrence"])+0.125) <= 1e-12
    assert value["deviation"] <= 1e-12

def test_eval_params(capsys: Any) -> None:
    """ Family parameters given as options: :math:`L_1^{(\\alpha)}(-1;q) = 1/(1-q)`. """
    doc = _json(capsys, ["eval", "--family", "q-laguerre", "--alpha", "0.5", "--q", "0.5",
                         "--n", "1", "--x", "-1", "--format", "json"])
    assert abs(_number(doc["values"][0]["series"])-2) <= 1e-12
    doc = _json(capsys, ["eval", "--family", "q-laguerre", "--param", "alpha=0.5", "--param", "q=0.5",
                         "--n", "1", "--x", "-1", "--format", "json"])
    assert abs(_number(doc["values"][0]["series"])-2) <= 1e-12

def test_tabulate_hermite(capsys: Any) -> None:
    """ :math:`H_0(0), H_1(0), H_2(0) = 1, 0, -2`. """
    doc = _json(capsys, ["tabulate", "--family", "hermite", "--degree", "2", "--x", "0", "--format", "json"])
    assert doc["columns"] == ["x", "p0", "p1", "p2"]
    (row,) = doc["rows"]
    values = [_number(v) for v in row[1:]]
    for value, expected in zip(values, [1, 0, -2]):
        assert abs(value-expected) <= 1e-12

def test_tabulate_krawtchouk_symmetry(capsys: Any) -> None:
    """ The Krawtchouk table is symmetric in degree and argument. """
    doc = _json(capsys, ["tabulate", "--family", "krawtchouk", "--p", "0.5", "--N", "4", "--degree", "4",
                         "--x", "0", "1", "2", "3", "4", "--format", "json"])
    rows = [[_number(v) for v in row[1:]] for row in doc["rows"]]
    for x in range(5):
        for n in range(5):
            assert abs(rows[x][n]-rows[n][x]) <= 1e-12

def test_tabulate_grid(capsys: Any) -> None:
    """ Equally spaced grids include both endpoints. """
    doc = _json(capsys, ["tabulate", "--family", "legendre", "--degree", "1", "--grid", "-1", "1", "5",
                         "--format", "json"])
    assert [_number(row[0]).real for row in doc["rows"]] == [-1.0, -0.5, 0.0, 0.5, 1.0]

def test_csv_output(capsys: Any) -> None:
    """ CSV tables have a header row and one row per point. """
    assert main(["tabulate", "--family", "hermite", "--degree", "2", "--x", "0", "1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "x,p0,p1,p2"
    assert len(lines) == 3

def test_pretty_output(capsys: Any) -> None:
    """ Pretty tables name the family. """
    assert main(["eval", "--family", "legendre", "--n", "2", "--x", "0.5"]) == 0
    assert "Legendre" in capsys.readouterr().out

def test_output_file(tmp_path: Path) -> None:
    """ Output is written to the given path. """
    path = tmp_path/"values.json"
    assert main(["eval", "--family", "legendre", "--n", "1", "--x", "0.5", "--format", "json", "-o", str(path)]) == 0
    doc = json.loads(path.read_text(encoding="utf8"))
    assert abs(_number(doc["values"][0]["series"])-0.5) <= 1e-12

def test_verify_classical(capsys: Any) -> None:
    """ The classical limit group passes, with a deterministic JSON report. """
    doc = _json(capsys, ["verify", "--suite", "limits", "--group", "classical", "--deterministic", "--format", "json"])
    assert doc["total"] == 23
    assert doc["passed"]
    assert "timestamp" not in doc

def test_verify_chapter(capsys: Any) -> None:
    """ Chapter numbers select the limit relation groups. """
    doc = _json(capsys, ["verify", "--suite", "limits", "--chapter", "2", "--deterministic", "--format", "json"])
    assert doc["total"] == 23
    assert doc["passed"]
    doc = _json(capsys, ["list-checks", "--suite", "limits", "--chapter", "4", "--chapter", "5", "--format", "json"])
    assert doc["total"] == 49+42
    doc = _json(capsys, ["list-checks", "--suite", "limits", "--chapter", "2", "--group", "classical",
                         "--format", "json"])
    assert doc["total"] == 23

def test_verify_failure(capsys: Any) -> None:
    """ A failed check gives exit status 1. """
    status = main(["verify", "--id", "limit:jacobi_laguerre", "--limit-tol", "1e-300", "--format", "json"])
    assert status == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["failed"] == 1

def test_list_families(capsys: Any) -> None:
    """ Every family is listed with its parameters. """
    doc = _json(capsys, ["list-families", "--format", "json"])
    names = [f["name"] for f in doc["families"]]
    assert "askey-wilson" in names and "hermite" in names
    assert next(f for f in doc["families"] if f["name"] == "jacobi")["params"] == ["alpha", "beta"]

def test_list_checks(capsys: Any) -> None:
    """ Checks selected by a filter, and catalog coverage. """
    doc = _json(capsys, ["list-checks", "--suite", "limits", "--group", "classical", "--format", "json"])
    assert doc["total"] == 23
    doc = _json(capsys, ["list-checks", "--coverage", "--format", "json"])
    assert doc["limit"] == {"planned": 114, "catalog": 114}

exit_statuses = [
    (["eval", "--family", "no-such-family", "--n", "1", "--x", "0.5"], 2, "Must reject unknown families."),
    (["eval", "--family", "legendre", "--alpha", "1", "--n", "1", "--x", "0.5"], 2,
     "Must reject unknown parameters."),
    (["eval", "--family", "legendre", "--n", "-1", "--x", "0.5"], 2, "Must reject negative degrees."),
    (["eval", "--family", "krawtchouk", "--p", "0.5", "--N", "2", "--n", "3", "--x", "1"], 3,
     "Must report degrees above N as numeric errors."),
    (["verify", "--suite", "no-such-module"], 2, "Must reject unknown suite modules."),
    (["verify", "--id", "limit:no_such_limit"], 2, "Must reject ids matching no check."),
    (["verify", "--suite", "limits", "--chapter", "3"], 2, "Must reject unknown chapters."),
    (["list-families", "--alpha", "1"], 2, "Must reject parameters outside eval and tabulate."),
    (["no-such-command"], 2, "Must reject unknown subcommands."),
    (["--help"], 0, "Must exit successfully on help."),
]

@pytest.mark.parametrize("argv, status, reason", exit_statuses)
def test_exit_status(argv: List[str], status: int, reason: str, capsys: Any) -> None:
    """ Checks exit statuses of usage and numeric errors. """
    assert main(argv) == status, reason
    capsys.readouterr()

def test_number_formats() -> None:
    """ Numbers are formatted as ``re+imi`` and parsed as integers, reals or complex values. """
    assert format_number(-0.125) == "-0.125+0.0i"
    assert format_number(complex(1, -2)) == "1.0-2.0i"
    assert parse_number("6") == 6 and isinstance(parse_number("6"), int)
    assert parse_number("0.5") == 0.5
    assert parse_number("1+2j") == 1+2j
    assert parse_params(["--alpha", "0.5", "--q=0.5"], ["N=6"]) == {"alpha": 0.5, "q": 0.5, "N": 6}

invalid_params = [
    (["alpha", "0.5"], "Must reject assignments without a leading '--'."),
    (["--alpha"], "Must reject assignments without a value."),
    (["--alpha", "half"], "Must reject non-numeric values."),
]

@pytest.mark.parametrize("extras, reason", invalid_params)
def test_params_failure(extras: List[str], reason: str) -> None:
    """ Checks parameter parsing failure modes. """
    try:
        parse_params(extras)
        assert False, reason
    except UsageError:
        pass
