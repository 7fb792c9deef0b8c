"""Vertex and filter documents (JSON), k-sweeps and CSV output."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .cases import CaseParameters, default_registry
from .errors import ParameterError, VertexFileError
from .filters import FilterSpec
from .linalg import RANK_TOL, ComplexMatrix, max_norm
from .scattering import dual_boundary, s_matrix_at
from .vertex import BoundaryPair, ReverseSTForm, STForm, assemble_boundary, require_admissible

DIGITS = 12

ComplexEntry = tuple[float, float]


def _entry(value: Any) -> Any:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return (float(value), 0.0)
    return value


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class CaseDocument(_Document):
    name: str
    params: dict[str, Any] = Field(default_factory=dict)


class VertexDocument(_Document):
    """
    {"n": 3, "form": "raw" | "st" | "reverse_st" | "case", ...}

    Matrices are lists of rows of [re, im] pairs (plain numbers are read as real).
    perm lists the original line (1-based) at each template position.
    """

    n: int = Field(ge=1)
    form: Literal["raw", "st", "reverse_st", "case"]
    a: list[list[ComplexEntry]] | None = Field(default=None, alias="A")
    b: list[list[ComplexEntry]] | None = Field(default=None, alias="B")
    s: list[list[ComplexEntry]] | None = Field(default=None, alias="S")
    t: list[list[ComplexEntry]] | None = Field(default=None, alias="T")
    perm: list[int] | None = None
    case: CaseDocument | None = None

    @model_validator(mode="before")
    @classmethod
    def _real_entries(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            for key in ("A", "B", "S", "T"):
                rows = data.get(key)
                if isinstance(rows, list):
                    data[key] = [
                        [_entry(v) for v in row] if isinstance(row, list) else row for row in rows
                    ]
        return data

    @model_validator(mode="after")
    def _required_fields(self) -> "VertexDocument":
        needed = {
            "raw": ("a", "b"),
            "st": ("s", "t"),
            "reverse_st": ("s", "t"),
            "case": ("case",),
        }[self.form]
        missing = [name for name in needed if getattr(self, name) is None]
        if missing:
            names = ", ".join(name.upper() if name != "case" else name for name in missing)
            raise ValueError(f"form {self.form!r} needs {names}")
        return self


class FilterSpecDocument(_Document):
    """{"pairs": {"12": "low", "23": "high", "31": "high"}, "targets": {...}, "epsilon": 0.2}"""

    pairs: dict[str, Literal["low", "high"]]
    targets: dict[str, float] = Field(default_factory=dict)
    epsilon: float | None = Field(default=None, gt=0)


def encode_complex(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def encode_matrix(matrix: ComplexMatrix) -> list[list[list[float]]]:
    return [[encode_complex(v) for v in row] for row in np.asarray(matrix)]


def _decode_matrix(rows: list[list[ComplexEntry]] | None) -> ComplexMatrix:
    if not rows:
        return np.zeros((0, 0), dtype=np.complex128)
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=np.complex128)


def _encode_param(value: Any) -> Any:
    if isinstance(value, complex):
        return encode_complex(value)
    if isinstance(value, np.ndarray):
        return encode_matrix(value)
    if isinstance(value, (list, tuple)):
        return [_encode_param(v) for v in value]
    return value


def _reject_duplicates(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    result: dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise VertexFileError(f"duplicate key {key!r}")
        result[key] = value
    return result


def _read_json(path: Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise VertexFileError(f"cannot read {path}: {e.strerror or e}") from None
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as e:
        raise VertexFileError(f"invalid JSON in {path}: {e.msg}", e.lineno, e.colno) from None


def _schema_error(path: Path, error: ValidationError) -> VertexFileError:
    first = error.errors()[0]
    where = ".".join(str(part) for part in first["loc"])
    return VertexFileError(f"{path}: {where or 'document'}: {first['msg']}")


@dataclass(frozen=True)
class VertexInput:
    """A loaded vertex together with the family or normal form it came from."""

    pair: BoundaryPair
    form: STForm | None = None
    case: CaseParameters | None = None


def vertex_from_document(doc: VertexDocument) -> VertexInput:
    if doc.form == "raw":
        result = VertexInput(BoundaryPair(_decode_matrix(doc.a), _decode_matrix(doc.b)))
    elif doc.form == "case":
        assert doc.case is not None
        params = dict(doc.case.params)
        if isinstance(params.get("S"), list):
            params["S"] = _decode_matrix(
                [[_entry(v) for v in row] for row in params["S"]]
            )
        case = default_registry().build(doc.case.name, params)
        result = VertexInput(case.boundary(), case.form(), case)
    else:
        perm = tuple(p - 1 for p in doc.perm) if doc.perm else tuple(range(doc.n))
        kind = ReverseSTForm if doc.form == "reverse_st" else STForm
        form = kind(_decode_matrix(doc.s), _decode_matrix(doc.t), perm)
        result = VertexInput(assemble_boundary(form), form)
    if result.pair.n != doc.n:
        raise VertexFileError(f"n = {doc.n} but the matrices describe {result.pair.n} lines")
    return result


def load_vertex(path: str | Path) -> VertexInput:
    """Read a vertex JSON document."""
    path = Path(path)
    data = _read_json(path)
    try:
        doc = VertexDocument.model_validate(data)
    except ValidationError as e:
        raise _schema_error(path, e) from None
    return vertex_from_document(doc)


def dump_vertex(pair: BoundaryPair) -> dict[str, Any]:
    """Raw JSON document of a vertex."""
    return {
        "n": pair.n,
        "form": "raw",
        "A": encode_matrix(pair.a),
        "B": encode_matrix(pair.b),
    }


def dump_case(case: CaseParameters) -> dict[str, Any]:
    return {
        "n": case.n,
        "form": "case",
        "case": {
            "name": case.name,
            "params": {key: _encode_param(v) for key, v in case.parameters().items()},
        },
    }


def write_json(document: dict[str, Any], path: str | Path, *, force: bool = False) -> None:
    path = Path(path)
    if path.exists() and not force:
        raise FileExistsError(f"{path} exists; use --force to overwrite")
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2)
        f.write("\n")


def load_filter_spec(path: str | Path) -> FilterSpec:
    """Read a filter request JSON document."""
    path = Path(path)
    data = _read_json(path)
    try:
        doc = FilterSpecDocument.model_validate(data)
    except ValidationError as e:
        raise _schema_error(path, e) from None
    return FilterSpec.from_mapping(doc.pairs, doc.targets, doc.epsilon)


@dataclass(frozen=True, eq=False)
class SweepResult:
    """S(k) tabulated on a log-spaced grid."""

    k: np.ndarray
    matrices: np.ndarray

    @property
    def n(self) -> int:
        return self.matrices.shape[1]

    @property
    def ordered_pairs(self) -> list[tuple[int, int]]:
        n = self.n
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    def reflection(self, i: int) -> np.ndarray:
        """|R_i(k)|^2 over the grid."""
        return np.abs(self.matrices[:, i - 1, i - 1]) ** 2

    def transmission(self, i: int, j: int) -> np.ndarray:
        """|T_ij(k)|^2 over the grid."""
        return np.abs(self.matrices[:, i - 1, j - 1]) ** 2

    def flux_residual(self) -> float:
        """max over rows and incoming lines of | |R_j|^2 + sum_i |T_ij|^2 - 1 |."""
        column_sums = np.sum(np.abs(self.matrices) ** 2, axis=1)
        return max_norm(column_sums - 1.0)

    def header(self, *, amplitudes: bool = False) -> list[str]:
        names = [f"R{i}" for i in range(1, self.n + 1)]
        names += [f"T{i}{j}" for i, j in self.ordered_pairs]
        if amplitudes:
            names = [f"{name}_{part}" for name in names for part in ("re", "im")]
        return ["k", *names]

    def rows(self, *, amplitudes: bool = False) -> list[list[str]]:
        fmt = f".{DIGITS - 1}e"
        rows = []
        for index, k in enumerate(self.k):
            m = self.matrices[index]
            values = [m[i, i] for i in range(self.n)]
            values += [m[i - 1, j - 1] for i, j in self.ordered_pairs]
            row = [format(float(k), fmt)]
            for value in values:
                if amplitudes:
                    row += [format(value.real, fmt), format(value.imag, fmt)]
                else:
                    row.append(format(abs(value) ** 2, fmt))
            rows.append(row)
        return rows


def sweep(
    pair: BoundaryPair,
    kmin: float,
    kmax: float,
    points: int,
    *,
    dual: bool = False,
    rank_tol: float = RANK_TOL,
) -> SweepResult:
    """Evaluate S(k) on points log-spaced wave numbers from kmin to kmax."""
    if not (math.isfinite(kmin) and math.isfinite(kmax) and 0 < kmin < kmax):
        raise ParameterError(f"need 0 < kmin < kmax, got kmin={kmin}, kmax={kmax}")
    if points < 2:
        raise ParameterError(f"need at least 2 points, got {points}")
    require_admissible(pair, rank_tol=rank_tol)
    if dual:
        pair = dual_boundary(pair)
    ks = np.logspace(math.log10(kmin), math.log10(kmax), points)
    matrices = np.stack([s_matrix_at(pair, k) for k in ks])
    return SweepResult(ks, matrices)


def write_csv(
    result: SweepResult, path: str | Path, *, amplitudes: bool = False, force: bool = False
) -> None:
    path = Path(path)
    if path.exists() and not force:
        raise FileExistsError(f"{path} exists; use --force to overwrite")
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(result.header(amplitudes=amplitudes))
        writer.writerows(result.rows(amplitudes=amplitudes))
