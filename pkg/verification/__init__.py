"""Invariant checks of the whole library and their json report."""

from .checks import VerifyContext, CheckResult, CHECKS, run_checks
from .report import REPORT_SCHEMA, build_report, write_report, summary_lines
from .factory import verify_cli, verify_factory
