"""実行時設定の解決（CLI 引数 > 環境変数 > 既定値）"""
import logging
import os
from typing import Optional

from config.constants import (
    DEFAULT_FIELD,
    DEFAULT_LOG_LEVEL,
    FIELD_ENV_VAR,
    JOBS_ENV_VAR,
    LOG_LEVEL_ENV_VAR,
)
from models.field import FieldChoice


class Config:
    """設定クラス - ワーカー数・係数体・ログレベルを管理"""

    @staticmethod
    def load_jobs(cli_value: Optional[int] = None) -> int:
        """ワーカープロセス数を決定

        Args:
            cli_value: --jobs の値（未指定なら None）

        Returns:
            int: ワーカー数（--jobs > COTAN_JOBS > CPU数）

        Raises:
            ValueError: 1 未満、または環境変数が整数でない場合
        """
        if cli_value is not None:
            jobs = cli_value
        elif os.environ.get(JOBS_ENV_VAR):
            raw = os.environ[JOBS_ENV_VAR]
            try:
                jobs = int(raw)
            except ValueError:
                raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got '{raw}'")
        else:
            jobs = os.cpu_count() or 1
        if jobs < 1:
            raise ValueError(f"number of jobs must be at least 1, got {jobs}")
        return jobs

    @staticmethod
    def load_field(cli_value: Optional[str] = None) -> FieldChoice:
        """係数体を決定（--field > COTAN_FIELD > q）

        Raises:
            ValueError: 解釈できない係数体の場合
        """
        return FieldChoice.parse(cli_value or os.environ.get(FIELD_ENV_VAR) or DEFAULT_FIELD)

    @staticmethod
    def load_log_level(verbose: int = 0) -> int:
        """ログレベルを決定（-v は INFO、-vv は DEBUG）"""
        if verbose >= 2:
            return logging.DEBUG
        if verbose == 1:
            return logging.INFO
        name = os.environ.get(LOG_LEVEL_ENV_VAR, DEFAULT_LOG_LEVEL).upper()
        level = logging.getLevelName(name)
        return level if isinstance(level, int) else logging.WARNING
