"""Approximate model counting with auditable certificates."""

__version__ = "0.1.0"

from .formula import (Assignment, CnfFormula, DimacsError, SolutionSet, copies_for,  # noqa: E402
                      enumerate_solutions, exact_count, make_copies, parse_dimacs, read_dimacs,
                      to_dimacs)
from .gf2hash import HashFunction, HashTuple, eval_hash, sample_hash  # noqa: E402
from .oracle import Oracle, OracleAnswer, OracleConfig  # noqa: E402
from .counters import (Estimate, af_count, equal_cells_count, read_certificate,  # noqa: E402
                       stock_count, write_certificate)
from .auditors import AuditReport, count_audit, equal_cells_audit, stock_audit  # noqa: E402
