"""
Exact linear algebra over QQ and GF(p) built on sympy's sparse DomainMatrix
"""
import logging
from typing import Dict, List, Tuple

from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

# 疎行列の行表現 {行番号: {列番号: 係数}}（係数はドメインの元、0 は持たない）
SparseRows = Dict[int, Dict[int, object]]


def _nonzero_rows(rows: SparseRows) -> SparseRows:
    return {i: r for i, r in rows.items() if r}


def rank(rows: SparseRows, shape: Tuple[int, int], domain) -> int:
    """厳密なガウス消去による階数

    Args:
        rows: 疎行列の行表現
        shape: (行数, 列数)
        domain: sympy の係数ドメイン（QQ, GF(p)）

    Returns:
        int: 階数
    """
    m, n = shape
    rows = _nonzero_rows(rows)
    if m == 0 or n == 0 or not rows:
        return 0
    return DomainMatrix(rows, shape, domain).rank()


def kernel_basis(rows: SparseRows, shape: Tuple[int, int], domain) -> List[Dict[int, object]]:
    """右零空間 {x : Mx = 0} の基底

    Returns:
        List[Dict[int, object]]: 基底ベクトルの疎表現
    """
    m, n = shape
    if n == 0:
        return []
    rows = _nonzero_rows(rows)
    if m == 0 or not rows:
        one = domain.one
        return [{j: one} for j in range(n)]
    null = DomainMatrix(rows, shape, domain).nullspace().to_sparse()
    basis = [dict(r) for _, r in sorted(null.rep.items())]
    logger.debug("kernel of %dx%d matrix has dimension %d", m, n, len(basis))
    return basis


def transpose(rows: SparseRows) -> SparseRows:
    out: SparseRows = {}
    for i, r in rows.items():
        for j, v in r.items():
            out.setdefault(j, {})[i] = v
    return out


def span_rank(vectors: List[Dict[int, object]], length: int, domain) -> int:
    """ベクトル族の張る部分空間の次元"""
    return rank(dict(enumerate(vectors)), (len(vectors), length), domain)
