"""
Ordered process-pool map with a progress bar
"""
import logging
from multiprocessing import Pool
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Sequence[T], jobs: int = 1,
                desc: Optional[str] = None, chunksize: int = 8) -> List[R]:
    """func を items に適用し、入力順のまま結果を返す

    Args:
        func: モジュールレベルの関数（pickle 可能であること）
        items: 入力列
        jobs: ワーカープロセス数（1 なら同一プロセスで実行）
        desc: 進捗バーの表示名（端末でないときは表示しない）
        chunksize: 1回にワーカーへ渡す件数

    Returns:
        List: 結果のリスト
    """
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in tqdm(items, desc=desc, disable=None, leave=False)]
    logger.info("%s: %d items on %d workers", desc or "map", len(items), jobs)
    with Pool(processes=jobs) as pool:
        return list(tqdm(pool.imap(func, items, chunksize=chunksize),
                         total=len(items), desc=desc, disable=None, leave=False))
