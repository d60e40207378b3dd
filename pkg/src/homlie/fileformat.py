"""
JSON file formats for algebras, representations, operator families and reports.

Rationals are always written as strings ("3", "-1/2") so nothing is lost to
floating point. Indices in files are 1-based. Algebra documents look like::

    {
      "kind": "algebra",
      "name": "sl2",
      "dim": 3,
      "bracket": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}, ...],
      "alpha": [["1", "0", "0"], ...],
      "representations": {
        "adjoint": {"vdim": 3, "rho": [[[...]], ...], "beta": [[...]]}
      }
    }

Bracket records normally have i < j, with [e_j, e_i] implied by skewness.
Records with i >= j are accepted and stored as given, so that a table
breaking skew-symmetry loads and is then reported by the validator.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import HomLieAlgebra, Representation
from .catalog import CatalogEntry
from .linalg import Matrix, format_rational, parse_rational, zero_vector
from .reconstruction import OperatorFamily


class FormatError(ValueError):
    """A document does not match the expected schema."""


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FormatError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_rational(str(value))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _field(doc: dict, key: str, where: str):
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    return doc[key]


def _matrix(value, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(value, list) or len(value) != rows:
        raise FormatError(f"{where}: expected {rows} rows")
    entries = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"{where}[{i}]: expected {cols} entries")
        entries.extend(_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row))
    return Matrix(rows, cols, entries)


def _matrix_any(value, where: str) -> Matrix:
    if not isinstance(value, list):
        raise FormatError(f"{where}: expected a list of rows")
    cols = len(value[0]) if value and isinstance(value[0], list) else 0
    return _matrix(value, len(value), cols, where)


def matrix_to_json(M: Matrix) -> list:
    return [[format_rational(x) for x in M.row(i)] for i in range(M.rows)]


def load_json(path) -> dict:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level: expected an object")
    return doc


# -- algebras ----------------------------------------------------------

def algebra_from_json(doc: dict) -> HomLieAlgebra:
    n = _int(_field(doc, "dim", "top level"), "dim")
    if n < 0:
        raise FormatError("dim: must be non-negative")
    given = {}
    records = doc.get("bracket", [])
    if not isinstance(records, list):
        raise FormatError("bracket: expected a list")
    for r, rec in enumerate(records):
        where = f"bracket[{r}]"
        i = _int(_field(rec, "i", where), f"{where}.i")
        j = _int(_field(rec, "j", where), f"{where}.j")
        if not (1 <= i <= n and 1 <= j <= n):
            raise FormatError(f"{where}: index out of range 1..{n}")
        coeffs = _field(rec, "coeffs", where)
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise FormatError(f"{where}.coeffs: expected {n} entries")
        if (i - 1, j - 1) in given:
            raise FormatError(f"{where}: duplicate record for ({i}, {j})")
        given[(i - 1, j - 1)] = tuple(_rational(x, f"{where}.coeffs[{k}]")
                                      for k, x in enumerate(coeffs))
    table = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
    for (i, j), v in given.items():
        table[i][j] = v
        if (j, i) not in given and i != j:
            table[j][i] = tuple(-x for x in v)
    alpha = _matrix(_field(doc, "alpha", "top level"), n, n, "alpha")
    return HomLieAlgebra(tuple(tuple(r) for r in table), alpha)


def representation_from_json(A: HomLieAlgebra, doc: dict, where: str) -> Representation:
    m = _int(_field(doc, "vdim", where), f"{where}.vdim")
    rho = _field(doc, "rho", where)
    if not isinstance(rho, list) or len(rho) != A.dim:
        raise FormatError(f"{where}.rho: expected {A.dim} matrices")
    mats = tuple(_matrix(r, m, m, f"{where}.rho[{i}]") for i, r in enumerate(rho))
    beta = _matrix(_field(doc, "beta", where), m, m, f"{where}.beta")
    return Representation(A, mats, beta)


def entry_from_json(doc: dict) -> CatalogEntry:
    kind = doc.get("kind", "algebra")
    if kind != "algebra":
        raise FormatError(f"kind: expected 'algebra', got {kind!r}")
    A = algebra_from_json(doc)
    reps = doc.get("representations", {})
    if not isinstance(reps, dict):
        raise FormatError("representations: expected an object keyed by name")
    return CatalogEntry(str(doc.get("name", "")), A,
                        {name: representation_from_json(A, r, f"representations.{name}")
                         for name, r in reps.items()})


def entry_to_json(entry: CatalogEntry) -> dict:
    A = entry.algebra
    n = A.dim
    records = [{"i": i + 1, "j": j + 1, "coeffs": [format_rational(x) for x in v]}
               for (i, j), v in A.brackets_upper().items()]
    return {
        "kind": "algebra",
        "name": entry.name,
        "dim": n,
        "bracket": records,
        "alpha": matrix_to_json(A.alpha),
        "representations": {
            name: {"vdim": R.vdim, "rho": [matrix_to_json(r) for r in R.rho],
                   "beta": matrix_to_json(R.beta)}
            for name, R in entry.representations.items()
        },
    }


# -- operator families -------------------------------------------------

def family_to_json(F: OperatorFamily) -> dict:
    return {
        "kind": "operator_family",
        "n": F.n, "m": F.m, "s": F.s,
        "alpha": matrix_to_json(F.alpha),
        "beta": matrix_to_json(F.beta),
        "D0": matrix_to_json(F.D0),
        "D1": matrix_to_json(F.D1),
        "Dtriv1": matrix_to_json(F.Dtriv1),
    }


def family_from_json(doc: dict) -> OperatorFamily:
    where = "top level"
    kw = {k: _int(_field(doc, k, where), k) for k in ("n", "m", "s")}
    for k in ("alpha", "beta", "D0", "D1", "Dtriv1"):
        kw[k] = _matrix_any(_field(doc, k, where), k)
    try:
        return OperatorFamily(**kw)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- reports -----------------------------------------------------------

def to_jsonable(obj):
    """Turn report objects (dataclasses, Fractions, matrices) into plain JSON values."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)
               if not f.name.startswith("_")}
        for prop in ("valid", "holds", "dimH"):
            if hasattr(type(obj), prop):
                out[prop] = to_jsonable(getattr(obj, prop))
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    return obj


def write_json(doc, path):
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")
