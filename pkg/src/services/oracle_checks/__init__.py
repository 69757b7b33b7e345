from src.services.oracle_checks.models import CaseResult, SuiteReport
from src.services.oracle_checks.suites import SUITES, BaseOracleSuite, run_suite

__all__ = ['SUITES', 'BaseOracleSuite', 'CaseResult', 'SuiteReport', 'run_suite']
