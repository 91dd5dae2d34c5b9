"""
Components layer for reusable output formatting
"""

from components.report_table import ReportTable
from components.json_output import JsonOutput

__all__ = ['ReportTable', 'JsonOutput']
