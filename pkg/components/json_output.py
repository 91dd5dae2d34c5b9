"""
JsonOutput Component: 決定的な JSON 出力
"""

import json
from typing import Any


class JsonOutput:
    """--json 出力の整形を担当するコンポーネント"""

    @staticmethod
    def dumps(payload: Any) -> str:
        """キー順を固定した JSON 文字列（同じ入力から同じバイト列）"""
        return json.dumps(payload, sort_keys=True, ensure_ascii=True)
