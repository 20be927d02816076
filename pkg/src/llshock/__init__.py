"""Log-Lindley lifetimes under Bernoulli shocks.

Evaluation and sampling of the log-Lindley distribution; shocked-component
and parallel-system distribution functions (with an atom at zero);
majorization predicates and T-transform machinery; usual-stochastic-order
comparison of two systems on a dense grid with a Monte Carlo cross-check;
and randomized verification of seven majorization-based dominance
statements, plus three fixed benchmark scenarios.
"""

from .hfunctions import BUILTIN_H_NAMES, HFunction, builtin_h
from .lindley import (
    LLParams,
    ll_cdf,
    ll_pdf,
    ll_quantile,
    ll_sample,
    ll_survival,
    ll_survival_dsigma,
)
from .majorization import (
    CONES,
    PAIR_KINDS,
    MajorVerdict,
    chain_majorize_apply,
    gen_ordered_pair,
    in_U_n,
    in_V_n,
    is_doubly_stochastic,
    is_t_transform,
    majorizes,
    mix_toward,
    row_majorizes,
    row_weakly_majorizes,
    t_transform,
    weakly_submajorizes,
    weakly_supermajorizes,
)
from .ordering import (
    Grid,
    OrderVerdict,
    Outcome,
    compare_st,
    compare_st_mc,
    make_grid,
    mc_tolerance,
    verdicts_agree,
)
from .shock import (
    ShockedComponent,
    SystemSpec,
    parallel_cdf,
    parallel_sample,
    shocked_cdf,
)
from .theorems import (
    DEFAULT_SEED,
    SCENARIO_IDS,
    THEOREM_IDS,
    TheoremInstance,
    VerifyReport,
    gen_theorem_instance,
    scenario_diff_table,
    scenario_systems,
    transformed_parallel_cdf,
    transformed_parallel_cdf_partial,
    transformed_scale,
    verify_theorem,
)

__all__ = [
    "BUILTIN_H_NAMES",
    "CONES",
    "DEFAULT_SEED",
    "Grid",
    "HFunction",
    "LLParams",
    "MajorVerdict",
    "OrderVerdict",
    "Outcome",
    "PAIR_KINDS",
    "SCENARIO_IDS",
    "ShockedComponent",
    "SystemSpec",
    "THEOREM_IDS",
    "TheoremInstance",
    "VerifyReport",
    "builtin_h",
    "chain_majorize_apply",
    "compare_st",
    "compare_st_mc",
    "gen_ordered_pair",
    "gen_theorem_instance",
    "in_U_n",
    "in_V_n",
    "is_doubly_stochastic",
    "is_t_transform",
    "ll_cdf",
    "ll_pdf",
    "ll_quantile",
    "ll_sample",
    "ll_survival",
    "ll_survival_dsigma",
    "majorizes",
    "make_grid",
    "mc_tolerance",
    "mix_toward",
    "parallel_cdf",
    "parallel_sample",
    "row_majorizes",
    "row_weakly_majorizes",
    "scenario_diff_table",
    "scenario_systems",
    "shocked_cdf",
    "t_transform",
    "transformed_parallel_cdf",
    "transformed_parallel_cdf_partial",
    "transformed_scale",
    "verdicts_agree",
    "verify_theorem",
    "weakly_submajorizes",
    "weakly_supermajorizes",
]

__version__ = "0.1.0"
