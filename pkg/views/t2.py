"""
T2 View: T²(Δ) = 0 の判定と証拠の表示
"""
from components.json_output import JsonOutput
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE
from models.field import FieldChoice
from services.cotangent_service import CotangentService
from views.common import print_header, read_complex_or_report


def show_t2(cotangent_service: CotangentService, path: str, field: FieldChoice,
            witness: bool = False, as_json: bool = False) -> int:
    """
    t2 サブコマンド

    Args:
        cotangent_service: T² 計算サービス
        path: JSON 複体のパス（'-' は標準入力）
        field: 係数体
        witness: True なら証拠の N_b, Ñ_b も表示
        as_json: JSON で出力

    Returns:
        int: 終了コード（消えれば 0、証拠があれば 1、入力エラーは 2）
    """
    complex_ = read_complex_or_report(path)
    if complex_ is None:
        return EXIT_USAGE

    result = cotangent_service.t2_vanishes(complex_, field)
    if as_json:
        print(JsonOutput.dumps({"field": field.label, **result.to_dict()}))
    else:
        print_header(field)
        if result.vanishes:
            print("VANISHES")
        else:
            print(result.witness_line())
            if witness:
                link = complex_.link(result.A)
                nb = cotangent_service.build_nb_pair(link, result.b)
                print(f"dimT1={result.dims.t1}")
                print(f"N_b ({len(nb.N)} faces): {nb.N.describe()}")
                print(f"Ntilde_b ({len(nb.Ntilde)} faces): {nb.Ntilde.describe()}")
    return EXIT_OK if result.vanishes else EXIT_CLAIM_FAILS
