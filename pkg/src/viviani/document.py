"""JSON interchange documents.

A document carries exactly one payload -- oriented planes, a convex
polygon, or a point list -- plus its ambient dimension and a free-form
string-to-string metadata map:

    {"dimension": 2,
     "planes": [{"normal": [0.0, 1.0], "offset": 1.0}, ...],
     "metadata": {"note": "..."}}

    {"dimension": 2, "polygon": {"vertices": [[0.0, 0.0], [1.0, 0.0], ...]}}

    {"dimension": 3, "points": [[0.0, 0.0, 0.0], ...]}

Normals are accepted as given when unit to 1e-9, renormalized with a
:class:`NormalizationWarning` when off by up to 1e-6, and rejected beyond
that.  Serialization uses shortest round-trip float formatting (Python's
repr), so parse -> serialize -> parse is the identity on the model.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DocumentSyntaxError,
    InvalidPolygon,
    NormalizationWarning,
    NormTolerance,
    SchemaError,
    VivianiError,
)
from .geometry import HyperplaneSet, OrientedHyperplane
from .polytope import ConvexPolygon, polygon_to_hyperplanes

_PAYLOAD_KEYS = ("planes", "polygon", "points")


@dataclass(frozen=True, eq=False)
class ConfigDocument:
    """Validated in-memory form of one interchange document."""

    dimension: int
    planes: tuple[OrientedHyperplane, ...] | None = None
    polygon: ConvexPolygon | None = None
    points: np.ndarray | None = None
    metadata: dict[str, str] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        if self.planes is not None:
            return "planes"
        if self.polygon is not None:
            return "polygon"
        return "points"

    def to_hyperplane_set(self) -> HyperplaneSet:
        """Planes of a planes- or polygon-document."""
        if self.planes is not None:
            return HyperplaneSet(self.planes)
        if self.polygon is not None:
            return polygon_to_hyperplanes(self.polygon)
        raise VivianiError("document holds points, not planes")

    def point_array(self) -> np.ndarray:
        if self.points is None:
            raise VivianiError("document holds no points")
        return self.points


def _require(cond: bool, where: str, what: str):
    if not cond:
        raise SchemaError(f"{where}: {what}")


def _as_number(x, where: str) -> float:
    _require(isinstance(x, (int, float)) and not isinstance(x, bool),
             where, "expected a number")
    v = float(x)
    _require(np.isfinite(v), where, "number must be finite")
    return v


def _as_coords(x, dim: int, where: str) -> list[float]:
    _require(isinstance(x, list), where, "expected an array of numbers")
    _require(len(x) == dim, where, f"expected {dim} coordinates, got {len(x)}")
    return [_as_number(v, f"{where}[{i}]") for i, v in enumerate(x)]


def _ingest_normal(coords: list[float], where: str) -> np.ndarray:
    n = np.array(coords)
    dev = abs(float(np.linalg.norm(n)) - 1.0)
    if dev <= 1e-9:
        return n
    if dev <= 1e-6:
        warnings.warn(
            f"{where}: normal off unit length by {dev:.3e}; renormalizing",
            NormalizationWarning,
            stacklevel=3,
        )
        return n / np.linalg.norm(n)
    raise NormTolerance(f"{where}: normal off unit length by {dev:.3e} (limit 1e-06)")


def parse_document(text: str | bytes) -> ConfigDocument:
    """Parse and validate one JSON document.

    Syntax problems raise :class:`DocumentSyntaxError` with line and column;
    structural problems raise :class:`SchemaError` naming the offending
    JSON path.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentSyntaxError(f"input is not UTF-8: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc

    _require(isinstance(raw, dict), "document", "expected a JSON object")
    unknown = set(raw) - {"dimension", "metadata", *_PAYLOAD_KEYS}
    _require(not unknown, "document", f"unknown keys {sorted(unknown)}")
    _require("dimension" in raw, "document", "missing 'dimension'")
    dim = raw["dimension"]
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
             "dimension", "expected an integer >= 1")

    present = [k for k in _PAYLOAD_KEYS if k in raw]
    _require(len(present) == 1, "document",
             f"exactly one of {list(_PAYLOAD_KEYS)} required, found {present or 'none'}")

    metadata = raw.get("metadata", {})
    _require(isinstance(metadata, dict), "metadata", "expected an object")
    for mk, mv in metadata.items():
        _require(isinstance(mk, str) and isinstance(mv, str),
                 f"metadata[{mk!r}]", "keys and values must be strings")

    kind = present[0]
    if kind == "planes":
        entries = raw["planes"]
        _require(isinstance(entries, list) and entries, "planes",
                 "expected a nonempty array")
        planes = []
        for i, e in enumerate(entries):
            where = f"planes[{i}]"
            _require(isinstance(e, dict), where, "expected an object")
            _require(set(e) == {"normal", "offset"}, where,
                     "expected exactly the keys 'normal' and 'offset'")
            n = _ingest_normal(_as_coords(e["normal"], dim, f"{where}.normal"), where)
            planes.append(OrientedHyperplane(n, _as_number(e["offset"], f"{where}.offset")))
        return ConfigDocument(dimension=dim, planes=tuple(planes), metadata=dict(metadata))

    if kind == "polygon":
        _require(dim == 2, "polygon", "polygon documents must have dimension 2")
        poly = raw["polygon"]
        _require(isinstance(poly, dict) and set(poly) == {"vertices"},
                 "polygon", "expected an object with the single key 'vertices'")
        verts = poly["vertices"]
        _require(isinstance(verts, list) and len(verts) >= 3, "polygon.vertices",
                 "expected an array of at least 3 vertices")
        coords = [_as_coords(v, 2, f"polygon.vertices[{i}]") for i, v in enumerate(verts)]
        try:
            polygon = ConvexPolygon(np.array(coords))
        except InvalidPolygon as exc:
            raise SchemaError(f"polygon.vertices: {exc}") from exc
        return ConfigDocument(dimension=2, polygon=polygon, metadata=dict(metadata))

    entries = raw["points"]
    _require(isinstance(entries, list) and entries, "points", "expected a nonempty array")
    coords = [_as_coords(p, dim, f"points[{i}]") for i, p in enumerate(entries)]
    pts = np.array(coords)
    pts.flags.writeable = False
    return ConfigDocument(dimension=dim, points=pts, metadata=dict(metadata))


def document_to_obj(doc: ConfigDocument) -> dict:
    """Plain-JSON form of a document (floats kept as Python floats)."""
    out: dict = {"dimension": doc.dimension}
    if doc.planes is not None:
        out["planes"] = [
            {"normal": [float(v) for v in p.normal], "offset": float(p.offset)}
            for p in doc.planes
        ]
    elif doc.polygon is not None:
        out["polygon"] = {
            "vertices": [[float(a), float(b)] for a, b in doc.polygon.vertices]
        }
    else:
        out["points"] = [[float(v) for v in row] for row in doc.points]
    if doc.metadata:
        out["metadata"] = dict(sorted(doc.metadata.items()))
    return out


def serialize_document(doc: ConfigDocument) -> str:
    """Deterministic JSON text for ``doc``: one entry per line, floats in
    shortest round-trip form, metadata keys sorted."""
    obj = document_to_obj(doc)
    segments = [f'"dimension": {obj["dimension"]}']
    if "planes" in obj:
        rows = ",\n    ".join(
            f'{{"normal": {json.dumps(e["normal"])}, "offset": {json.dumps(e["offset"])}}}'
            for e in obj["planes"]
        )
        segments.append(f'"planes": [\n    {rows}\n  ]')
    elif "polygon" in obj:
        rows = ",\n      ".join(json.dumps(v) for v in obj["polygon"]["vertices"])
        segments.append(f'"polygon": {{\n    "vertices": [\n      {rows}\n    ]\n  }}')
    else:
        rows = ",\n    ".join(json.dumps(p) for p in obj["points"])
        segments.append(f'"points": [\n    {rows}\n  ]')
    if "metadata" in obj:
        segments.append(f'"metadata": {json.dumps(obj["metadata"], sort_keys=True)}')
    return "{\n  " + ",\n  ".join(segments) + "\n}\n"


def load_document(path) -> ConfigDocument:
    with open(path, "rb") as fh:
        return parse_document(fh.read())


def planes_document(S: HyperplaneSet, metadata: dict[str, str] | None = None) -> ConfigDocument:
    return ConfigDocument(dimension=S.dimension, planes=tuple(S.planes),
                          metadata=dict(metadata or {}))


def points_document(points, dimension: int | None = None,
                    metadata: dict[str, str] | None = None) -> ConfigDocument:
    pts = np.atleast_2d(np.asarray(points, dtype=float)).copy()
    pts.flags.writeable = False
    return ConfigDocument(dimension=dimension or pts.shape[1], points=pts,
                          metadata=dict(metadata or {}))


def polygon_document(G: ConvexPolygon, metadata: dict[str, str] | None = None) -> ConfigDocument:
    return ConfigDocument(dimension=2, polygon=G, metadata=dict(metadata or {}))
