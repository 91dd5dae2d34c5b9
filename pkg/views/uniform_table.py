"""
Uniform Table View: 一様マトロイドの dim T²_{-b} を閉じた式と突き合わせる
"""
from components.json_output import JsonOutput
from components.report_table import ReportTable
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE, MAX_MATROID_N
from models import vertex_set as vs
from models.field import FieldChoice
from services.matroid_service import MatroidService
from views.common import print_header, usage_error


def show_uniform_table(matroid_service: MatroidService, max_n: int, field: FieldChoice,
                       as_json: bool = False) -> int:
    """
    uniform-table サブコマンド

    1 ≤ r ≤ n ≤ max_n と #b = 1..n の全てについて、計算値と式の値を表示する。
    対称性から b = {0, ..., #b-1} だけを計算する。

    Returns:
        int: 終了コード（全て一致で 0）
    """
    if not 1 <= max_n <= MAX_MATROID_N:
        usage_error(f"--max-n must be between 1 and {MAX_MATROID_N}")
        return EXIT_USAGE

    cotangent = matroid_service.cotangent_service
    rows = []
    for n in range(1, max_n + 1):
        for r in range(1, n + 1):
            complex_ = matroid_service.uniform(n, r).complex
            for k in range(1, n + 1):
                computed = cotangent.t_dims_negative(complex_, vs.full(k), field).t2
                expected = matroid_service.uniform_t2_formula(n, r, k)
                rows.append((n, r, k, computed, expected, ReportTable.verdict(computed == expected)))
    passed = all(row[-1] == "PASS" for row in rows)

    if as_json:
        print(JsonOutput.dumps({
            "field": field.label,
            "passed": passed,
            "rows": [dict(zip(("n", "r", "b", "computed", "formula", "verdict"), row)) for row in rows],
        }))
    else:
        print_header(field)
        for line in ReportTable.render(("n", "r", "#b", "computed", "formula", "verdict"), rows):
            print(line)
        print(f"summary: {ReportTable.verdict(passed)} ({len(rows)} rows)")
    return EXIT_OK if passed else EXIT_CLAIM_FAILS
