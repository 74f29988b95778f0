"""Verification harness: per-graph records, suites, hunts and the CLI."""

from .records import GraphRecord, analyze, family_match
from .suites import HUNTS, SUITES, HuntResult, SuiteResult, run_hunt, run_suite

__all__ = ["GraphRecord", "analyze", "family_match", "HUNTS", "SUITES", "HuntResult", "SuiteResult",
           "run_hunt", "run_suite"]
