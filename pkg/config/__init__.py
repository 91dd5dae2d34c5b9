"""
Config package: Application constants and configuration
"""

from .constants import (
    MAX_GROUND_SET,
    MAX_CANONICAL_N,
    MAX_CLASSIFY_N,
    MAX_MATROID_N,
    MAX_ENUMERATE_MATROID_N,
    MAX_PRIME,
    DEFAULT_FIELD,
    EXIT_OK,
    EXIT_CLAIM_FAILS,
    EXIT_USAGE,
    JOBS_ENV_VAR,
    FIELD_ENV_VAR,
    LOG_LEVEL_ENV_VAR,
    EXPECTED_1D_CLASSES,
    DEFAULT_GOLDEN_PATH,
    LOG_FORMAT,
)

__all__ = [
    'MAX_GROUND_SET',
    'MAX_CANONICAL_N',
    'MAX_CLASSIFY_N',
    'MAX_MATROID_N',
    'MAX_ENUMERATE_MATROID_N',
    'MAX_PRIME',
    'DEFAULT_FIELD',
    'EXIT_OK',
    'EXIT_CLAIM_FAILS',
    'EXIT_USAGE',
    'JOBS_ENV_VAR',
    'FIELD_ENV_VAR',
    'LOG_LEVEL_ENV_VAR',
    'EXPECTED_1D_CLASSES',
    'DEFAULT_GOLDEN_PATH',
    'LOG_FORMAT',
]
