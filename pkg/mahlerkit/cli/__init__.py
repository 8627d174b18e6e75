from .main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main, render
from .report import CRITERIA, CriterionResult, run_report

__all__ = [
    "CRITERIA",
    "CriterionResult",
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "main",
    "render",
    "run_report",
]
