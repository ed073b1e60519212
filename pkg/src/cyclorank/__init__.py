"""Exact-arithmetic tools around the Stickelberger rank predictor D(X)
for the cyclotomic field Q(zeta_p), with independent relative class
number oracles and a (p, h) range scanner."""

from .errors import ConsistencyError, ParameterError
from .ffpoly import Factorization, ModPoly, factorize, is_squarefree, poly_gcd, reduce
from .hminus import (
    HMinusResult,
    MailletMatrix,
    ValuationResult,
    analytic_hminus,
    bernoulli_even,
    exact_hminus,
    hminus_valuation,
    irregular_index,
    maillet_matrix,
)
from .intpoly import NEG_INF, IntPoly
from .scanner import (
    HuntReport,
    ScanConfig,
    ScanRecord,
    hunt_counterexamples,
    ingest_reference_ranks,
    scan,
)
from .stickelberger import (
    DxResult,
    PowerTable,
    all_primitive_roots,
    build_P,
    build_Q,
    build_power_table,
    compute_D,
    smallest_primitive_root,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "ParameterError",
    "ModPoly",
    "Factorization",
    "reduce",
    "poly_gcd",
    "factorize",
    "is_squarefree",
    "IntPoly",
    "NEG_INF",
    "PowerTable",
    "DxResult",
    "smallest_primitive_root",
    "all_primitive_roots",
    "build_power_table",
    "build_P",
    "build_Q",
    "verify_identity",
    "compute_D",
    "MailletMatrix",
    "HMinusResult",
    "ValuationResult",
    "maillet_matrix",
    "exact_hminus",
    "hminus_valuation",
    "analytic_hminus",
    "irregular_index",
    "bernoulli_even",
    "ScanConfig",
    "ScanRecord",
    "HuntReport",
    "scan",
    "hunt_counterexamples",
    "ingest_reference_ranks",
    "__version__",
]
