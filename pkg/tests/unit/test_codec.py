"""Tests for the complex-aware JSON helpers."""
import json

import numpy as np
import pytest

from attainlab.utils.complex_codec import (
    ComplexEncoder,
    decode_complex,
    decode_matrix,
    dumps_sorted,
    encode_complex,
    encode_matrix,
    to_jsonable,
)


def test_encode_complex():
    assert encode_complex(1.5 - 2j) == [1.5, -2.0]
    assert encode_complex(3) == [3.0, 0.0]


@pytest.mark.parametrize("raw,expected", [([1.0, 2.0], 1 + 2j), (0.25, 0.25 + 0j), (4, 4 + 0j), ((0, -1), -1j)])
def test_decode_complex(raw, expected):
    assert decode_complex(raw) == expected


@pytest.mark.parametrize("raw", ["1+2j", [1.0], [1.0, 2.0, 3.0], None])
def test_decode_complex_rejects_other_shapes(raw):
    with pytest.raises(ValueError):
        decode_complex(raw)


def test_matrix_layout_is_row_major():
    matrix = np.array([[1 + 1j, 2], [3, -4j]])
    encoded = encode_matrix(matrix)
    assert encoded == [[[1.0, 1.0], [2.0, 0.0]], [[3.0, 0.0], [0.0, -4.0]]]
    assert np.array_equal(decode_matrix(encoded), matrix)
    assert decode_matrix([[0.5, [0, 1]]]).shape == (1, 2)


def test_decode_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        decode_matrix([[1.0, 2.0], [3.0]])


def test_to_jsonable_handles_numpy_values():
    data = {
        "count": np.int64(3),
        "ratio": np.float64(0.5),
        "flag": np.bool_(True),
        "vector": np.array([1.0, 2.0]),
        "roots": np.array([1j, 2.0]),
        3: (1 + 0j,),
    }
    assert to_jsonable(data) == {
        "count": 3,
        "ratio": 0.5,
        "flag": True,
        "vector": [1.0, 2.0],
        "roots": [[0.0, 1.0], [2.0, 0.0]],
        "3": [[1.0, 0.0]],
    }


def test_encoder_falls_back_for_unknown_types():
    assert json.loads(json.dumps({"z": 2j}, cls=ComplexEncoder)) == {"z": [0.0, 2.0]}
    with pytest.raises(TypeError):
        json.dumps({"s": {1, 2}}, cls=ComplexEncoder)


def test_dumps_sorted_is_deterministic():
    first = dumps_sorted({"b": 1, "a": {"d": 0.1, "c": 1j}})
    second = dumps_sorted({"a": {"c": 1j, "d": 0.1}, "b": 1})
    assert first == second
    assert first.index('"a"') < first.index('"b"')
    assert json.loads(first)["a"]["d"] == 0.1
