"""
Join Check View: 結合複体の T² 公式の検証
"""
from components.json_output import JsonOutput
from components.report_table import ReportTable
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE
from models import vertex_set as vs
from models.field import FieldChoice
from services.cotangent_service import CotangentService
from views.common import print_header, read_complex_or_report


def show_join_check(cotangent_service: CotangentService, first_path: str, second_path: str,
                    field: FieldChoice, as_json: bool = False) -> int:
    """
    join-check サブコマンド

    Returns:
        int: 終了コード（全ての類で一致し、消滅の同値も成り立てば 0）
    """
    first = read_complex_or_report(first_path)
    second = read_complex_or_report(second_path)
    if first is None or second is None:
        return EXIT_USAGE

    result = cotangent_service.join_graded_check(first, second, field)
    if as_json:
        print(JsonOutput.dumps({
            "field": field.label,
            "passed": result.passed,
            "classes_checked": result.classes_checked,
            "join_vanishes": result.join_vanishes,
            "factors_vanish": result.factors_vanish,
            "mismatches": [{"A": list(vs.members(m.A)), "b": list(vs.members(m.b)),
                            "lhs": m.lhs, "rhs": m.rhs} for m in result.mismatches],
        }))
    else:
        print_header(field)
        print(f"classes checked: {result.classes_checked}")
        for m in result.mismatches:
            print(f"MISMATCH A={vs.format_set(m.A)} b={vs.format_set(m.b)} join={m.lhs} formula={m.rhs}")
        print(f"T2(join) vanishes: {result.join_vanishes}; both factors vanish: {result.factors_vanish}")
        print(ReportTable.verdict(result.passed))
    return EXIT_OK if result.passed else EXIT_CLAIM_FAILS
