"""
Conjecture View: マトロイドの T² = 0 と余階数2以下の直和分解の一致を走査
"""
import logging
from typing import Iterable, Iterator, List, Optional, Tuple

from components.json_output import JsonOutput
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE, MAX_ENUMERATE_MATROID_N
from models.field import FieldChoice
from models.matroid import Matroid
from services.matroid_service import MatroidParseError, MatroidService
from utils.matroid_db import DatabaseFormatError, read_database
from views.common import print_header, usage_error

logger = logging.getLogger(__name__)

# データベースを読み進める単位（この件数ずつ並列に検証して入力順に出力）
_BATCH = 256


def _database_matroids(matroid_service: MatroidService, path: str) -> Iterator[Tuple[str, Matroid]]:
    for record in read_database(path):
        try:
            matroid = matroid_service.parse_revlex(record.text, record.n, record.r)
        except MatroidParseError as e:
            raise DatabaseFormatError(str(e), record.line_number)
        yield f"line {record.line_number}", matroid


def _batches(items: Iterable, size: int) -> Iterator[List]:
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def show_conjecture_check(matroid_service: MatroidService, field: FieldChoice,
                          db_path: Optional[str] = None, enumerate_max_n: Optional[int] = None,
                          jobs: int = 1, as_json: bool = False) -> int:
    """
    conjecture-check サブコマンド

    データベース（--db）または総当たり列挙（--enumerate --max-n）のマトロイドを順に検証し、
    一致しないものは再現に必要な情報（revlex 文字列・基底・証拠）とともに表示する。

    Returns:
        int: 終了コード（全て一致で 0）
    """
    if (db_path is None) == (enumerate_max_n is None):
        usage_error("give exactly one of --db <path> or --enumerate --max-n <n>")
        return EXIT_USAGE
    if enumerate_max_n is not None and not 1 <= enumerate_max_n <= MAX_ENUMERATE_MATROID_N:
        usage_error(f"--enumerate supports --max-n between 1 and {MAX_ENUMERATE_MATROID_N}")
        return EXIT_USAGE

    if db_path is not None:
        source = _database_matroids(matroid_service, db_path)
    else:
        source = ((f"#{i}", m) for i, m in enumerate(matroid_service.enumerate_all(enumerate_max_n), start=1))

    if not as_json:
        print_header(field)
    counts = {"agree": 0, "counterexample": 0, "bug": 0}
    records = []
    try:
        for batch in _batches(source, _BATCH):
            verdicts = matroid_service.conjecture_sweep([m for _, m in batch], jobs=jobs, desc="conjecture")
            for (label, matroid), verdict in zip(batch, verdicts):
                counts[verdict.kind] += 1
                entry = {"source": label, "n": matroid.n, "r": matroid.rank, "t2_vanishes": verdict.lhs,
                         "corank_le_2_components": verdict.rhs, "verdict": verdict.kind}
                if not verdict.agree:
                    entry["revlex"] = matroid_service.to_revlex(matroid)
                    entry["bases"] = matroid.describe()
                    if verdict.witness is not None:
                        entry["witness"] = verdict.witness.witness_line()
                if as_json:
                    records.append(entry)
                else:
                    print(" ".join(f"{k}={v}" for k, v in entry.items()))
    except (DatabaseFormatError, OSError) as e:
        usage_error(str(e))
        return EXIT_USAGE

    total = sum(counts.values())
    disagreements = counts["counterexample"] + counts["bug"]
    if as_json:
        print(JsonOutput.dumps({"field": field.label, "matroids": records, "summary": counts}))
    else:
        print(f"checked {total} matroids: {counts['agree']} agree, "
              f"{counts['counterexample']} counterexample candidates, {counts['bug']} corank<=2 failures")
    if counts["counterexample"]:
        logger.error("%d counterexample candidates found", counts["counterexample"])
    return EXIT_OK if not disagreements else EXIT_CLAIM_FAILS
