"""
Corank2 View: 余階数2以下のマトロイドの T² = 0 を全数検証
"""
import logging

from components.json_output import JsonOutput
from components.report_table import ReportTable
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE, MAX_MATROID_N
from models.field import FieldChoice
from services.matroid_service import MatroidService
from views.common import print_header, usage_error

logger = logging.getLogger(__name__)


def show_corank2_verify(matroid_service: MatroidService, max_n: int, field: FieldChoice,
                        jobs: int = 1, as_json: bool = False) -> int:
    """
    corank2-verify サブコマンド

    Returns:
        int: 終了コード（反例がなければ 0）
    """
    if not 1 <= max_n <= MAX_MATROID_N:
        usage_error(f"--max-n must be between 1 and {MAX_MATROID_N}")
        return EXIT_USAGE

    summary = []
    failures = []
    for n in range(1, max_n + 1):
        matroids = matroid_service.corank_at_most_two(n)
        results = matroid_service.vanishing_sweep(matroids, jobs=jobs, desc=f"corank<=2, n={n}")
        bad = [(m, res) for m, res in zip(matroids, results) if not res.vanishes]
        for m, res in bad:
            logger.error("T2 does not vanish for a corank <= 2 matroid: %s (%s)", m.describe(), res.witness_line())
        failures.extend(bad)
        summary.append((n, len(matroids), len(bad), ReportTable.verdict(not bad)))

    if as_json:
        print(JsonOutput.dumps({
            "field": field.label,
            "rows": [dict(zip(("n", "matroids", "failures", "verdict"), row)) for row in summary],
            "failures": [{"matroid": m.describe(), **res.to_dict()} for m, res in failures],
        }))
    else:
        print_header(field)
        for line in ReportTable.render(("n", "matroids", "failures", "verdict"), summary):
            print(line)
        for m, res in failures:
            print(f"FAIL {m.describe()} {res.witness_line()}")
        print(f"summary: {ReportTable.verdict(not failures)}")
    return EXIT_OK if not failures else EXIT_CLAIM_FAILS
