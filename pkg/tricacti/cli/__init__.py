from .base import EXIT_FAILED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, build_parser, main, run
from .suites import SUITES, suite_runners

__all__: list[str] = [
    "EXIT_FAILED",
    "EXIT_LIMIT",
    "EXIT_OK",
    "EXIT_USAGE",
    "SUITES",
    "build_parser",
    "main",
    "run",
    "suite_runners",
]
