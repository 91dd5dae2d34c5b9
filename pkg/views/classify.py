"""
Classify View: T² = 0 となる1次元複体の分類とゴールデンファイルとの照合
"""
import logging
import os
import sys
from typing import Optional

from components.json_output import JsonOutput
from config.constants import (
    DEFAULT_GOLDEN_PATH,
    EXIT_CLAIM_FAILS,
    EXIT_OK,
    EXIT_USAGE,
    EXPECTED_1D_CLASSES,
    MAX_CLASSIFY_N,
)
from services.graph_service import GoldenFormatError, GraphService
from views.common import usage_error

logger = logging.getLogger(__name__)


def show_classify_1d(graph_service: GraphService, max_n: int, golden_path: Optional[str] = None,
                     as_json: bool = False, write_golden: bool = False) -> int:
    """
    classify-1d サブコマンド

    分類結果をゴールデンファイル（省略時は同梱の一覧）と同型類ごとに照合する。
    write_golden のときは照合せずに書き出す。max_n = 8 では件数が 26 であることも確かめる。

    Returns:
        int: 終了コード
    """
    path = golden_path or DEFAULT_GOLDEN_PATH
    if not write_golden and not os.path.exists(path):
        usage_error(f"golden file not found: {path} (use --write-golden to create it)")
        return EXIT_USAGE

    try:
        result = graph_service.classify_1d(max_n)
    except ValueError as e:
        usage_error(str(e))
        return EXIT_USAGE

    ok = True
    if max_n == MAX_CLASSIFY_N and result.count != EXPECTED_1D_CLASSES:
        logger.error("expected %d classes, found %d", EXPECTED_1D_CLASSES, result.count)
        ok = False

    if write_golden:
        graph_service.write_golden(result, path, max_n)
        golden_status = "written"
    else:
        try:
            diff = graph_service.compare_golden(result, path, max_n)
        except (GoldenFormatError, OSError) as e:
            usage_error(f"{path}: {e}")
            return EXIT_USAGE
        golden_status = "match" if not diff else "differs"
        for line in diff:
            print(line, file=sys.stderr)
        ok = ok and not diff

    if as_json:
        print(JsonOutput.dumps({
            "count": result.count,
            "golden": golden_status,
            "classes": [{"n": e.n, "edges": e.edge_count, "matroid": e.is_matroid,
                         "canonical": e.canonical.decode("ascii")} for e in result.entries],
        }))
    else:
        for line in result.to_lines():
            print(line)
        print(f"golden: {golden_status}")
        print(f"{result.count} classes")
    return EXIT_OK if ok else EXIT_CLAIM_FAILS
