"""
T2 Graded View: 多重次数ごとの T¹, T² の表
"""
from components.json_output import JsonOutput
from components.report_table import ReportTable
from config.constants import EXIT_OK, EXIT_USAGE
from models.field import FieldChoice
from services.cotangent_service import CotangentService
from views.common import print_header, read_complex_or_report


def show_t2_graded(cotangent_service: CotangentService, path: str, field: FieldChoice,
                   include_t1: bool = False, as_json: bool = False) -> int:
    """
    t2-graded サブコマンド

    T² が非零の類 (A, b) を (|A|, A, |b|, b) 順に1行ずつ表示する。
    include_t1 なら T¹ だけが非零の類も表示する。

    Returns:
        int: 終了コード
    """
    complex_ = read_complex_or_report(path)
    if complex_ is None:
        return EXIT_USAGE

    report = cotangent_service.graded_report(complex_, field)
    if as_json:
        print(JsonOutput.dumps(report.to_dict(include_t1)))
        return EXIT_OK
    print_header(field)
    for line in ReportTable.graded_rows(report.nonzero_rows(include_t1)):
        print(line)
    return EXIT_OK
