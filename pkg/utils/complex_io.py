"""
JSON complex format: {"n": <int>, "facets": [[<int>...], ...]}
"""
import json
import logging
import sys
from typing import Any

from config.constants import MAX_GROUND_SET
from models.simplicial_complex import SimplicialComplex

logger = logging.getLogger(__name__)


class ComplexFormatError(ValueError):
    """JSON 複体の形式エラー"""


def parse_complex(data: Any, source: str = "<input>") -> SimplicialComplex:
    """JSON から読んだ値を検証して単体複体にする

    "facets": [] は void、"facets": [[]] は {∅}。

    Raises:
        ComplexFormatError: 形式が不正な場合
    """
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ComplexFormatError(f"{source}: expected an object with keys 'n' and 'facets'")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n <= MAX_GROUND_SET:
        raise ComplexFormatError(f"{source}: 'n' must be an integer in 0..{MAX_GROUND_SET}")
    facets = data["facets"]
    if not isinstance(facets, list):
        raise ComplexFormatError(f"{source}: 'facets' must be a list")
    for k, facet in enumerate(facets):
        if not isinstance(facet, list):
            raise ComplexFormatError(f"{source}: facet #{k} is not a list")
        for v in facet:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise ComplexFormatError(f"{source}: facet #{k} has invalid vertex {v!r} (n={n})")
        if len(set(facet)) != len(facet):
            raise ComplexFormatError(f"{source}: facet #{k} repeats a vertex")
    complex_ = SimplicialComplex.from_facets(n, facets, check_capacity=True)
    if len(complex_.facets) != len(facets):
        logger.info("%s: %d listed facets reduced to %d maximal ones", source, len(facets), len(complex_.facets))
    return complex_


def load_complex(path: str) -> SimplicialComplex:
    """ファイル（'-' は標準入力）から複体を読む

    Raises:
        ComplexFormatError: JSON として読めない、または形式が不正な場合
        OSError: ファイルを開けない場合
    """
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as handle:
                data = json.load(handle)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return parse_complex(data, path)


def dump_complex(complex_: SimplicialComplex) -> str:
    return json.dumps(complex_.to_dict())
