"""
Main Application: Router for the cotangent cohomology calculator
"""

import argparse
import logging
import sys
from typing import List, Optional

from config.constants import (
    EXIT_USAGE,
    FIELD_CHOICES_HELP,
    LOG_FORMAT,
    MAX_CLASSIFY_N,
    MAX_ENUMERATE_MATROID_N,
)
from services.complex_service import ComplexService
from services.cotangent_service import CotangentService
from services.graph_service import GraphService
from services.homology_service import HomologyService
from services.matroid_service import MatroidService
from utils.config import Config

# ビューモジュールをインポート
from views.t2 import show_t2
from views.t2_graded import show_t2_graded
from views.classify import show_classify_1d
from views.uniform_table import show_uniform_table
from views.corank2 import show_corank2_verify
from views.conjecture import show_conjecture_check
from views.join_check import show_join_check

logger = logging.getLogger(__name__)


# =========================
# 引数の定義
# =========================
def build_parser() -> argparse.ArgumentParser:
    """サブコマンド付きの引数パーサを作る"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=str, default=None, help=FIELD_CHOICES_HELP)
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: COTAN_JOBS or CPU count)")
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")

    ap = argparse.ArgumentParser(prog="cotan", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("t2", parents=[common], help="decide T2 = 0 for a JSON complex")
    p.add_argument("input", help="JSON complex file, or - for stdin")
    p.add_argument("--witness", action="store_true", help="also print N_b and Ntilde_b of the witness")

    p = sub.add_parser("t2-graded", parents=[common], help="table of nonzero (A, b) classes")
    p.add_argument("input", help="JSON complex file, or - for stdin")
    p.add_argument("--include-t1", action="store_true", help="also list classes where only T1 is nonzero")

    p = sub.add_parser("classify-1d", parents=[common], help="classify one-dimensional complexes with T2 = 0")
    p.add_argument("--max-n", type=int, default=MAX_CLASSIFY_N)
    p.add_argument("--golden", type=str, default=None, help="golden file to compare against (default: bundled list)")
    p.add_argument("--write-golden", action="store_true", help="write the golden file instead of comparing")

    p = sub.add_parser("uniform-table", parents=[common], help="uniform matroids against the closed formula")
    p.add_argument("--max-n", type=int, default=8)

    p = sub.add_parser("corank2-verify", parents=[common], help="T2 = 0 for all corank <= 2 matroids")
    p.add_argument("--max-n", type=int, default=7)

    p = sub.add_parser("conjecture-check", parents=[common], help="scan matroids for the corank-two conjecture")
    p.add_argument("--db", type=str, default=None, help="matroid database file")
    p.add_argument("--enumerate", action="store_true", help="enumerate all small matroids instead of --db")
    p.add_argument("--max-n", type=int, default=MAX_ENUMERATE_MATROID_N)

    p = sub.add_parser("join-check", parents=[common], help="check the T2 formula for a join")
    p.add_argument("first", help="JSON complex file")
    p.add_argument("second", help="JSON complex file")
    return ap


# =========================
# メインアプリケーション
# =========================
def main(argv: Optional[List[str]] = None) -> int:
    """メインルーター: サブコマンドに応じて適切なビューを呼ぶ"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=Config.load_log_level(args.verbose), format=LOG_FORMAT, stream=sys.stderr)

    try:
        field = Config.load_field(args.field)
        jobs = Config.load_jobs(args.jobs)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.info("command=%s field=%s jobs=%d", args.command, field.label, jobs)

    # =========================
    # サービス層の初期化
    # =========================
    homology_service = HomologyService(field)
    cotangent_service = CotangentService(homology_service, field)
    complex_service = ComplexService()
    matroid_service = MatroidService(cotangent_service, complex_service, field)
    graph_service = GraphService(jobs=jobs)

    command = args.command
    if command == "t2":
        return show_t2(cotangent_service, args.input, field, witness=args.witness, as_json=args.json)

    elif command == "t2-graded":
        return show_t2_graded(cotangent_service, args.input, field,
                              include_t1=args.include_t1, as_json=args.json)

    elif command == "classify-1d":
        return show_classify_1d(graph_service, args.max_n, args.golden, as_json=args.json,
                                write_golden=args.write_golden)

    elif command == "uniform-table":
        return show_uniform_table(matroid_service, args.max_n, field, as_json=args.json)

    elif command == "corank2-verify":
        return show_corank2_verify(matroid_service, args.max_n, field, jobs=jobs, as_json=args.json)

    elif command == "conjecture-check":
        return show_conjecture_check(
            matroid_service, field,
            db_path=args.db,
            enumerate_max_n=args.max_n if args.enumerate else None,
            jobs=jobs,
            as_json=args.json,
        )

    elif command == "join-check":
        return show_join_check(cotangent_service, args.first, args.second, field, as_json=args.json)

    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
