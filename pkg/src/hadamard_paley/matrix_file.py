"""Reading and writing matrix files.

Text format: an optional comment line ``# order=N method=NAME key=value ...``
followed by N lines of N characters from ``+``, ``-`` (and ``0`` for
conference matrices).  JSON format: one object with the same provenance
fields plus ``matrix``, a list of such row strings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParameterError

_CHAR = {1: "+", -1: "-", 0: "0"}
_VALUE = {"+": 1, "-": -1, "0": 0}
_TOKEN = re.compile(r"(\w+)=(\([^()]*(?:\([^()]*\)[^()]*)*\)|\S+)")


class MatrixFormatError(ParameterError):
    """A matrix file failed to parse; message carries source:line:column."""


@dataclass
class MatrixFile:
    matrix: np.ndarray
    method: str | None = None
    params: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.matrix.shape[0]


def render_rows(M) -> list[str]:
    return ["".join(_CHAR[int(x)] for x in row) for row in np.asarray(M)]


def header_line(order: int, method: str | None, params: dict) -> str:
    parts = [f"# order={order}"]
    if method:
        parts.append(f"method={method}")
    for key, value in params.items():
        if isinstance(value, int) and key == "sign":
            value = f"{value:+d}"
        elif isinstance(value, str) and key.startswith("seed"):
            value = f"({value})"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def render_text(mf: MatrixFile) -> str:
    lines = []
    if mf.method is not None:
        lines.append(header_line(mf.order, mf.method, mf.params))
    lines.extend(render_rows(mf.matrix))
    return "\n".join(lines) + "\n"


def render_json(mf: MatrixFile, verdict: str | None = None) -> str:
    obj = {
        "order": mf.order,
        "method": mf.method,
        "params": mf.params or None,
        "verdict": verdict,
        "spectra": None,
        "matrix": render_rows(mf.matrix),
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _parse_header(line: str, source: str) -> tuple[int | None, str | None, dict]:
    order = method = None
    params: dict = {}
    for key, value in _TOKEN.findall(line[1:]):
        if key == "order":
            if not value.isdigit():
                raise MatrixFormatError(f"{source}:1:1: bad order value {value!r} in header")
            order = int(value)
        elif key == "method":
            method = value
        elif value.startswith("("):
            params[key] = value[1:-1]
        else:
            try:
                params[key] = int(value)
            except ValueError:
                params[key] = value
    return order, method, params


def _parse_rows(rows: list[str], first_lineno: int, source: str, declared: int | None) -> np.ndarray:
    n = len(rows)
    if n == 0:
        raise MatrixFormatError(f"{source}:{first_lineno}:1: no matrix rows found")
    if declared is not None and declared != n:
        raise MatrixFormatError(f"{source}:{first_lineno}:1: header declares order {declared} but file has {n} rows")
    M = np.empty((n, n), dtype=np.int8)
    for i, row in enumerate(rows):
        lineno = first_lineno + i
        if len(row) != n:
            raise MatrixFormatError(f"{source}:{lineno}:{len(row) + 1}: expected {n} entries, found {len(row)}")
        for j, ch in enumerate(row):
            if ch not in _VALUE:
                raise MatrixFormatError(f"{source}:{lineno}:{j + 1}: invalid character {ch!r}")
            M[i, j] = _VALUE[ch]
    return M


def parse_text(text: str, source: str = "<string>") -> MatrixFile:
    if text.lstrip().startswith("{"):
        return parse_json(text, source)
    lines = text.splitlines()
    declared = method = None
    params: dict = {}
    start = 0
    if lines and lines[0].startswith("#"):
        declared, method, params = _parse_header(lines[0], source)
        start = 1
    body = lines[start:]
    while body and not body[-1].strip():
        body.pop()
    rows = [line.rstrip("\r") for line in body]
    return MatrixFile(_parse_rows(rows, start + 1, source, declared), method, params)


def parse_json(text: str, source: str = "<string>") -> MatrixFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    rows = obj.get("matrix") if isinstance(obj, dict) else None
    if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
        raise MatrixFormatError(f"{source}:1:1: JSON object lacks a 'matrix' list of row strings")
    # positions in JSON input refer to the matrix rows, not file lines
    M = _parse_rows(rows, 1, f"{source}[matrix]", obj.get("order"))
    return MatrixFile(M, obj.get("method"), obj.get("params") or {})


def read_matrix(path) -> MatrixFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"{path}: cannot read file: {exc.strerror}") from None
    return parse_text(text, str(path))
