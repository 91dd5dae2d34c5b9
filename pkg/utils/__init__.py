"""
Utils layer for configuration, I/O and exact linear algebra helpers
"""

from .config import Config
from .complex_io import ComplexFormatError, load_complex, parse_complex, dump_complex
from .matroid_db import DatabaseFormatError, DatabaseRecord, iter_records, read_database
from .parallel import ordered_map

__all__ = [
    'Config',
    'ComplexFormatError',
    'load_complex',
    'parse_complex',
    'dump_complex',
    'DatabaseFormatError',
    'DatabaseRecord',
    'iter_records',
    'read_database',
    'ordered_map',
]
