"""
Views module: Output logic for each subcommand
"""

from .t2 import show_t2
from .t2_graded import show_t2_graded
from .classify import show_classify_1d
from .uniform_table import show_uniform_table
from .corank2 import show_corank2_verify
from .conjecture import show_conjecture_check
from .join_check import show_join_check

__all__ = [
    'show_t2',
    'show_t2_graded',
    'show_classify_1d',
    'show_uniform_table',
    'show_corank2_verify',
    'show_conjecture_check',
    'show_join_check',
]
