"""Exact q-series arithmetic and a verification harness for finite,
reflected, and limiting sum-product identities."""

from .series import (LaurentSeries, BivariateSeries, WindowError,
                     NotExactError, first_discrepancy, agree_to_order,
                     series_sum)
from .qfactory import (qbinomial, qbinomial_star, qbinomial_window,
                       pochhammer_finite, pochhammer_infinite,
                       alternating_theta, ProductFactor, ProductSpec,
                       parse_product, expand_product, bracket,
                       geometric_divide)
from .partition_oracle import (ConstraintProfile, GAP23, PROFILES,
                               enumerate_partitions, count_partitions,
                               count_by_parts, generating_polynomial,
                               minimal_configuration, generate_by_motions)
from .identities import (kr_finite, kr_finite_x, kr_infinite, kr_product,
                         s_recursion, f_general, eqid, eqid_sweep,
                         capparelli_analytic, cap43, cap43_rhs,
                         cap_reflected_even, cap_reflected_even_rhs,
                         cap_reflected_odd, cap_reflected_odd_rhs,
                         cap71, cap71_rhs, cap71_reflected,
                         cap71_reflected_rhs, bressoud_finite,
                         bressoud_reflected, schur_finite, andrews_even,
                         andrews_odd, bressoud79_sum, rr_sum, rogers_sum,
                         BuiltCheck, CatalogEntry, catalog)
from .reflect_limits import (normalization_exponent, rk_finite,
                             stabilized_limit, StabilizationError,
                             rk_limit, rk_ab_finite, rk_ab_infinite,
                             combo_series, positivity_scan,
                             linear_relation_sides, MOD45_PRODUCTS,
                             BRACKET_COMBOS)

__version__ = "0.1.0"

__all__ = [
    "LaurentSeries", "BivariateSeries", "WindowError", "NotExactError",
    "first_discrepancy", "agree_to_order", "series_sum",
    "qbinomial", "qbinomial_star", "qbinomial_window",
    "pochhammer_finite", "pochhammer_infinite", "alternating_theta",
    "ProductFactor", "ProductSpec", "parse_product", "expand_product",
    "bracket", "geometric_divide",
    "ConstraintProfile", "GAP23", "PROFILES", "enumerate_partitions",
    "count_partitions", "count_by_parts", "generating_polynomial",
    "minimal_configuration", "generate_by_motions",
    "kr_finite", "kr_finite_x", "kr_infinite", "kr_product",
    "s_recursion", "f_general", "eqid", "eqid_sweep",
    "capparelli_analytic", "cap43", "cap43_rhs",
    "cap_reflected_even", "cap_reflected_even_rhs",
    "cap_reflected_odd", "cap_reflected_odd_rhs",
    "cap71", "cap71_rhs", "cap71_reflected", "cap71_reflected_rhs",
    "bressoud_finite", "bressoud_reflected", "schur_finite",
    "andrews_even", "andrews_odd", "bressoud79_sum", "rr_sum",
    "rogers_sum", "BuiltCheck", "CatalogEntry", "catalog",
    "normalization_exponent", "rk_finite", "stabilized_limit",
    "StabilizationError", "rk_limit", "rk_ab_finite", "rk_ab_infinite",
    "combo_series", "positivity_scan", "linear_relation_sides",
    "MOD45_PRODUCTS", "BRACKET_COMBOS",
]
