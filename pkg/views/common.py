"""ビュー共通の入出力処理"""
import logging
import sys
from typing import Optional

from models.field import FieldChoice
from models.simplicial_complex import SimplicialComplex
from utils.complex_io import load_complex

logger = logging.getLogger(__name__)


def usage_error(message: str) -> None:
    """入力エラーを標準エラー出力に表示"""
    print(f"error: {message}", file=sys.stderr)


def read_complex_or_report(path: str) -> Optional[SimplicialComplex]:
    """複体を読み込む。失敗したらエラーを表示して None を返す"""
    try:
        complex_ = load_complex(path)
    except (ValueError, OSError) as e:
        usage_error(str(e))
        return None
    if complex_.is_void:
        usage_error(f"{path}: the void complex has no T1/T2 classes")
        return None
    return complex_


def print_header(field: FieldChoice) -> None:
    print(f"field: {field.label}")
