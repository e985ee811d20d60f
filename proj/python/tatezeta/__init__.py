"""Exact and high-precision verification of critical-line zeta polynomials.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (
    TatezetaError,
    __version__,
    cauchy_root_bound,
    critical_line_restriction,
    export_table_json,
    gamma,
    hermite_poly,
    laguerre_poly,
    lrh_verify,
    ortho_weight,
    run_suite_json,
    strip_shrink_property,
    sturm_count,
    zeta_numeric,
    zeta_poly,
    zeta_roots,
)

__all__ = [
    "TatezetaError",
    "__version__",
    "cauchy_root_bound",
    "critical_line_restriction",
    "export_table_json",
    "gamma",
    "hermite_poly",
    "laguerre_poly",
    "lrh_verify",
    "ortho_weight",
    "run_suite_json",
    "strip_shrink_property",
    "sturm_count",
    "zeta_numeric",
    "zeta_poly",
    "zeta_roots",
]
