"""JSON file formats for matrices and vectors.

Matrix file::

    {"n": 2, "field": "real", "kind": "pd", "data": [[1, 0], [0, 1]]}

Complex entries are ``[re, im]`` pairs and require ``"field": "complex"``.
``kind`` is one of ``"pd"``, ``"density"``, ``"general"``. Vector files have
the same layout without ``kind`` and with a flat ``data`` list.
"""
import json

import numpy as np

from ._validate import as_density, as_pd, as_square

KINDS = ("pd", "density", "general")
FIELDS = ("real", "complex")
SIGNIFICANT_DIGITS = 15


class ParseError(ValueError):
    """The file is not valid JSON or does not follow the documented layout."""


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"{where}: expected a number, got {x!r}")
    return float(x)


def _entry(x, field, where):
    if field == "real":
        return _number(x, where)
    if not (isinstance(x, list) and len(x) == 2):
        raise ParseError(f"{where}: complex entries must be [re, im] pairs, got {x!r}")
    return complex(_number(x[0], where), _number(x[1], where))


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    for key in ("n", "field", "data"):
        if key not in doc:
            raise ParseError(f"{path}: missing key {key!r}")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"{path}: 'n' must be a positive integer")
    if doc["field"] not in FIELDS:
        raise ParseError(f"{path}: 'field' must be one of {FIELDS}")
    if not isinstance(doc["data"], list):
        raise ParseError(f"{path}: 'data' must be a list")
    return doc


def parse_matrix(doc, path="<matrix>"):
    """Turn a decoded matrix document into ``(array, kind, field)``.

    Raises ``ParseError`` on layout problems and ``ValidationError`` when the
    matrix violates the invariant of its declared kind.
    """
    kind = doc.get("kind", "general")
    if kind not in KINDS:
        raise ParseError(f"{path}: 'kind' must be one of {KINDS}")
    n, field, rows = doc["n"], doc["field"], doc["data"]
    if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"{path}: 'data' must be an {n}x{n} array")
    A = np.array(
        [[_entry(x, field, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)],
        dtype=np.complex128,
    )
    if kind == "pd":
        A = as_pd(A, path)
    elif kind == "density":
        A = as_density(A, path)
    else:
        A = as_square(A, path)
    return A, kind, field


def parse_vector(doc, path="<vector>"):
    n, field, data = doc["n"], doc["field"], doc["data"]
    if len(data) != n:
        raise ParseError(f"{path}: 'data' must have length {n}")
    x = np.array([_entry(v, field, f"{path}[{i}]") for i, v in enumerate(data)])
    return x, field


def load_matrix(path):
    return parse_matrix(_load_json(path), str(path))


def load_vector(path):
    return parse_vector(_load_json(path), str(path))


def fmt(x):
    """Round to the printed precision; the result survives a text round trip."""
    x = float(f"{float(x):.{SIGNIFICANT_DIGITS}g}")
    return 0.0 if x == 0 else x


def matrix_payload(A, kind, field):
    A = np.asarray(A)
    if field == "real":
        data = [[fmt(v.real) for v in row] for row in A]
    else:
        data = [[[fmt(v.real), fmt(v.imag)] for v in row] for row in A]
    return {"n": int(A.shape[0]), "field": field, "kind": kind, "data": data}


def vector_payload(x, field):
    x = np.asarray(x)
    if field == "real":
        data = [fmt(v.real) for v in x]
    else:
        data = [[fmt(v.real), fmt(v.imag)] for v in x]
    return {"n": int(x.size), "field": field, "data": data}
