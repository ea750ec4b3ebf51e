"""JSON helpers for complex numbers and numpy arrays."""
import json
from typing import Any, List, Sequence

import numpy as np


def encode_complex(value: complex) -> List[float]:
    """Encode a complex scalar as an ``[re, im]`` pair."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def decode_complex(pair: Any) -> complex:
    """
    Decode a complex scalar.

    Accepts an ``[re, im]`` pair or a bare real number.
    """
    if isinstance(pair, (int, float)):
        return complex(float(pair), 0.0)
    if isinstance(pair, (list, tuple)) and len(pair) == 2:
        return complex(float(pair[0]), float(pair[1]))
    raise ValueError(f"expected [re, im] pair, got {pair!r}")


def encode_matrix(matrix: Any) -> List[List[List[float]]]:
    """Encode a 2-D array as row-major nested ``[re, im]`` pairs."""
    array = np.atleast_2d(np.asarray(matrix, dtype=np.complex128))
    return [[encode_complex(entry) for entry in row] for row in array]


def decode_matrix(rows: Sequence[Sequence[Any]]) -> np.ndarray:
    """Decode row-major nested pairs into a complex128 array."""
    if len(rows) == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    decoded = [[decode_complex(entry) for entry in row] for row in rows]
    widths = {len(row) for row in decoded}
    if len(widths) != 1:
        raise ValueError("matrix rows have different lengths")
    return np.array(decoded, dtype=np.complex128).reshape(len(decoded), widths.pop())


class ComplexEncoder(json.JSONEncoder):
    """JSON encoder that handles complex scalars and numpy values."""

    def default(self, obj):
        if isinstance(obj, np.ndarray):
            if np.iscomplexobj(obj):
                return to_jsonable(obj)
            return obj.tolist()
        if isinstance(obj, (complex, np.complexfloating)):
            return encode_complex(obj)
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        return super().default(obj)


def to_jsonable(data: Any) -> Any:
    """Recursively convert numpy/complex values into JSON-serializable data."""
    if isinstance(data, dict):
        return {str(key): to_jsonable(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_jsonable(item) for item in data]
    if isinstance(data, np.ndarray):
        if np.iscomplexobj(data):
            if data.ndim == 0:
                return encode_complex(data.item())
            return [to_jsonable(item) for item in data]
        return data.tolist()
    if isinstance(data, (complex, np.complexfloating)):
        return encode_complex(data)
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.floating):
        return float(data)
    if isinstance(data, np.bool_):
        return bool(data)
    return data


def dumps_sorted(data: Any) -> str:
    """Serialize with sorted keys and round-trip float precision."""
    return json.dumps(to_jsonable(data), cls=ComplexEncoder, sort_keys=True, indent=2)
