"""
ReportTable Component: 固定幅のテキスト表の生成
"""

from typing import List, Sequence

from models import vertex_set as vs
from models.report import GradedEntry


class ReportTable:
    """結果表のテキスト生成を担当するコンポーネント"""

    @staticmethod
    def render(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> List[str]:
        """
        見出しと行から左揃えの表を生成

        Args:
            headers: 列見出し
            rows: 各行の値

        Returns:
            List[str]: 出力行（末尾の空白は除く）
        """
        cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
        return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]

    @staticmethod
    def graded_rows(entries: Sequence[GradedEntry]) -> List[str]:
        """多重次数付き表（A, b, dimT1, dimT2）"""
        rows = [(vs.format_set(e.A), vs.format_set(e.b), e.t1, e.t2) for e in entries]
        return ReportTable.render(("A", "b", "dimT1", "dimT2"), rows)

    @staticmethod
    def verdict(passed: bool) -> str:
        return "PASS" if passed else "FAIL"
