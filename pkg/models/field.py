"""係数体モデル"""
from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import GF, QQ

from config.constants import MAX_PRIME


@dataclass(frozen=True)
class FieldChoice:
    """係数体 K の選択

    characteristic == 0 は有理数体（厳密な分数演算）、
    それ以外は素体 GF(p) を表す。
    """
    characteristic: int = 0

    @classmethod
    def rationals(cls) -> "FieldChoice":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldChoice":
        """素体 GF(p)

        Raises:
            ValueError: p が素数でない、または 2^16 以上の場合
        """
        if not (2 <= p < MAX_PRIME and isprime(p)):
            raise ValueError(f"GF(p) needs a prime p < {MAX_PRIME}, got {p}")
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldChoice":
        """CLI 表記 q / gf2 / gf<p> を解釈

        Raises:
            ValueError: 解釈できない表記の場合
        """
        token = text.strip().lower()
        if token in ("q", "qq", "rationals"):
            return cls.rationals()
        if token.startswith("gf") and token[2:].isdigit():
            return cls.prime(int(token[2:]))
        raise ValueError(f"unknown field '{text}' (expected q, gf2 or gf<p>)")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def domain(self):
        """sympy の係数ドメイン（QQ または GF(p)）"""
        return QQ if self.is_rational else GF(self.characteristic)

    @property
    def label(self) -> str:
        return "Q" if self.is_rational else f"GF({self.characteristic})"
