"""
Matroid database reader

One matroid per line as a revlex basis-indicator string. Header lines
`# n=<n> r=<r>` switch the size context; other lines starting with `#` are
comments; blank lines are skipped.
"""
import re
from dataclasses import dataclass
from typing import Iterator, TextIO

_HEADER = re.compile(r"^#\s*n\s*=\s*(\d+)\s+r\s*=\s*(\d+)\s*$")


class DatabaseFormatError(ValueError):
    """データベースの形式エラー（line_number は1始まり）"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class DatabaseRecord:
    line_number: int
    n: int
    r: int
    text: str


def iter_records(handle: TextIO) -> Iterator[DatabaseRecord]:
    """データベースの本文行を (n, r) の文脈付きで順に返す

    Raises:
        DatabaseFormatError: ヘッダより前に本文行がある場合
    """
    n = r = None
    for line_number, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match:
                n, r = int(match.group(1)), int(match.group(2))
            continue
        if n is None:
            raise DatabaseFormatError("matroid line before any '# n=<n> r=<r>' header", line_number)
        yield DatabaseRecord(line_number, n, r, line)


def read_database(path: str) -> Iterator[DatabaseRecord]:
    with open(path, encoding="utf-8") as handle:
        yield from iter_records(handle)
