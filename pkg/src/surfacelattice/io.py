"""JSON readers and writers for lattices, isometries, delta sets and specs."""

import json

from . import scalar
from .elliptic import SurfaceSpec
from .lattice import Isometry, Lattice, LatticeError
from .reflection_groups import DeltaSet


def lattice_to_json(lat):
    return {
        "rank": lat.rank,
        "gram": [[x if isinstance(x, int) else scalar.to_text(x) for x in row] for row in lat.gram],
        "label": lat.label,
    }


def lattice_from_json(obj):
    try:
        gram = tuple(tuple(scalar.parse(x) for x in row) for row in obj["gram"])
    except (KeyError, TypeError) as exc:
        raise LatticeError(f"malformed lattice JSON: {exc}") from exc
    if "rank" in obj and obj["rank"] != len(gram):
        raise LatticeError(f"rank {obj['rank']} does not match a {len(gram)}x{len(gram)} gram matrix")
    return Lattice(gram, label=obj.get("label", ""))


def isometry_to_json(g):
    return {"matrix": [list(row) for row in g.matrix]}


def isometry_from_json(obj):
    try:
        return Isometry(tuple(tuple(int(x) for x in row) for row in obj["matrix"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeError(f"malformed isometry JSON: {exc}") from exc


def delta_to_json(delta):
    out = {"lattice": lattice_to_json(delta.lattice), "vectors": [list(v) for v in delta.vectors]}
    if delta.names:
        out["names"] = list(delta.names)
    return out


def delta_from_json(obj):
    lat = lattice_from_json(obj["lattice"])
    return DeltaSet(lat, [tuple(vector_from_json(v)) for v in obj["vectors"]], names=tuple(obj.get("names", ())))


def vector_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise LatticeError(f"a vector must be a flat integer array, got {obj!r}")
    return tuple(obj)


def spec_from_json(obj):
    try:
        return SurfaceSpec(obj["d"], obj.get("q", 0), tuple(obj.get("multiplicities", ())))
    except (KeyError, TypeError) as exc:
        raise LatticeError(f"malformed surface spec JSON: {exc}") from exc


def to_jsonable(x):
    """Turn tuples, enums, sympy values and dataclass reports into JSON data."""
    if hasattr(x, "to_dict"):
        return to_jsonable(x.to_dict())
    if isinstance(x, Lattice):
        return lattice_to_json(x)
    if isinstance(x, Isometry):
        return isometry_to_json(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x.value if hasattr(x, "value") else x
    if hasattr(x, "value"):
        return x.value
    return scalar.to_text(x)
