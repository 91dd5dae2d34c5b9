"""
VertexSet: subsets of the ground set {0, ..., n-1} stored as int bitmasks
"""
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

# ビット i が立っていれば頂点 i を含む
VertexSet = int

EMPTY: VertexSet = 0


def from_indices(indices: Iterable[int]) -> VertexSet:
    """頂点番号の列からビット集合を作成

    Args:
        indices: 0始まりの頂点番号

    Returns:
        VertexSet: ビット集合

    Raises:
        ValueError: 負の番号が含まれる場合
    """
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"vertex index must be non-negative, got {i}")
        mask |= 1 << i
    return mask


def members(mask: VertexSet) -> Tuple[int, ...]:
    """ビット集合の要素を昇順で返す"""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def singleton(i: int) -> VertexSet:
    return 1 << i


def full(n: int) -> VertexSet:
    """{0, ..., n-1}"""
    return (1 << n) - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def sort_key(mask: VertexSet) -> Tuple[int, Tuple[int, ...]]:
    """(要素数, 辞書順) の並び順キー

    出力の決定性（証拠の選択・表の行順）はすべてこの順序に従う。
    """
    return (mask.bit_count(), members(mask))


def sorted_sets(masks: Iterable[VertexSet]) -> List[VertexSet]:
    return sorted(masks, key=sort_key)


def subsets(mask: VertexSet) -> Iterator[VertexSet]:
    """mask の全部分集合（空集合を含む）を (要素数, 辞書順) で列挙"""
    elems = members(mask)
    for k in range(len(elems) + 1):
        for combo in combinations(elems, k):
            yield from_indices(combo)


def subsets_of_size(mask: VertexSet, k: int) -> Iterator[VertexSet]:
    for combo in combinations(members(mask), k):
        yield from_indices(combo)


def relabel(mask: VertexSet, mapping: dict) -> VertexSet:
    """頂点番号を mapping に従って付け替える（mapping にない頂点は捨てる）"""
    out = 0
    for i in members(mask):
        if i in mapping:
            out |= 1 << mapping[i]
    return out


def format_set(mask: VertexSet) -> str:
    """出力用表記: {0,2} / 空集合は {}"""
    return "{" + ",".join(str(i) for i in members(mask)) + "}"
