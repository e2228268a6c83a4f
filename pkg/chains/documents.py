"""
JSON documents for complexes and chain maps.

A complex is ``{"dims": {"2": 1}, "d": {"2": [["1/2"]]}}`` and a map is
``{"source": <complex>, "target": <complex>, "comps": {"2": [["1"]]}}``.
Degree keys are decimal strings and matrices are row-major arrays of
rational literals.
"""

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Union

from linalg import Matrix, ShapeError

from .chain_map import ChainMap
from .complex import Complex, validate
from .exceptions import DocumentError


def _degree(key: Any) -> int:
    try:
        return int(key)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"degree key {key!r} is not an integer") from exc


def _matrix(data: Any, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise DocumentError(f"{where}: matrix must be an array of arrays")
    try:
        return Matrix.from_strings(rows, cols, data)
    except ShapeError as exc:
        raise DocumentError(f"{where}: expected a {rows}x{cols} matrix") from exc
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def complex_to_document(x: Complex) -> Dict[str, Any]:
    return {
        "dims": {str(n): k for n, k in x.dims.items()},
        "d": {str(n): m.to_strings() for n, m in sorted(x.differentials().items())},
    }


def complex_from_document(doc: Mapping[str, Any], check: bool = True) -> Complex:
    """
    Parse a complex document.

    Args:
        doc (Mapping[str, Any]): The parsed JSON object.
        check (bool): Also require ``d∘d = 0``. Defaults to True.

    Raises:
        DocumentError: On missing fields, bad degrees or mis-shaped matrices.
        ValidationError: If ``d∘d`` is nonzero.
    """
    if not isinstance(doc, Mapping) or "dims" not in doc:
        raise DocumentError("complex document needs a 'dims' field")
    dims_doc = doc["dims"]
    if not isinstance(dims_doc, Mapping):
        raise DocumentError("'dims' must map degrees to dimensions")
    dims = {}
    for key, size in dims_doc.items():
        if not isinstance(size, int) or isinstance(size, bool) or size < 0:
            raise DocumentError(f"dimension in degree {key} must be a non-negative integer")
        dims[_degree(key)] = size
    diff = {}
    for key, data in (doc.get("d") or {}).items():
        n = _degree(key)
        diff[n] = _matrix(data, dims.get(n - 1, 0), dims.get(n, 0), f"d in degree {n}")
    x = Complex(dims, diff)
    if check:
        validate(x).raise_for_failure()
    return x


def map_to_document(f: ChainMap) -> Dict[str, Any]:
    return {
        "source": complex_to_document(f.source),
        "target": complex_to_document(f.target),
        "comps": {str(n): m.to_strings() for n, m in sorted(f.components().items())},
    }


def map_from_document(doc: Mapping[str, Any], validate_map: bool = True) -> ChainMap:
    """
    Parse a chain map document.

    Args:
        doc (Mapping[str, Any]): The parsed JSON object.
        validate_map (bool): Check the complexes and the commutation with
            the differentials. Defaults to True.

    Raises:
        DocumentError: On malformed content.
        ValidationError: If a complex or the map fails its equations.
    """
    if not isinstance(doc, Mapping) or not {"source", "target"} <= set(doc):
        raise DocumentError("map document needs 'source' and 'target' fields")
    source = complex_from_document(doc["source"], check=validate_map)
    target = complex_from_document(doc["target"], check=validate_map)
    comps = {}
    for key, data in (doc.get("comps") or {}).items():
        n = _degree(key)
        comps[n] = _matrix(data, target.dim(n), source.dim(n), f"component in degree {n}")
    return ChainMap(source, target, comps, validate=validate_map)


def dumps(doc: Any) -> str:
    """Serialize a document deterministically."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def read_document(path: Union[str, Path]) -> Any:
    """
    Load a JSON document from disk.

    Raises:
        DocumentError: If the file is missing or is not valid JSON.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}") from exc


def write_document(path: Union[str, Path], doc: Any) -> None:
    Path(path).write_text(dumps(doc))


def load_complex(path: Union[str, Path]) -> Complex:
    return complex_from_document(read_document(path))


def load_map(path: Union[str, Path]) -> ChainMap:
    return map_from_document(read_document(path))
