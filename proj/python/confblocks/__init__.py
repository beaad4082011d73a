"""Ranks, levels and degrees of type-A conformal block bundles on genus-zero curves.

Weights are given either as text (``"2w1+w3"``, ``"[3,1,1]"``, ``"0"``) or as
lists of row lengths. Large integers come back as ``int``, rationals as
``fractions.Fraction``.
"""

from ._core import (
    CapacityError,
    ConsistencyError,
    DomainError,
    ParseError,
    PreconditionError,
    __version__,
    cb_rank,
    coinvariant_rank,
    conformal_weight,
    contracts,
    critical_level,
    degree_m04,
    dual,
    factorization_rank,
    fcurves,
    fusion_coefficient,
    gw_invariant,
    hassett_weights,
    invariant_oracle,
    kac_walton_fusion,
    lr_coefficient,
    parse_weight,
    partner,
    rim_hook_reduce,
    run_cli,
    theta_level,
    transpose,
    vanishing_report,
    weight_name,
    witten_rank,
)

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "__version__",
    "cb_rank",
    "coinvariant_rank",
    "conformal_weight",
    "contracts",
    "critical_level",
    "degree_m04",
    "dual",
    "factorization_rank",
    "fcurves",
    "fusion_coefficient",
    "gw_invariant",
    "hassett_weights",
    "invariant_oracle",
    "kac_walton_fusion",
    "lr_coefficient",
    "parse_weight",
    "partner",
    "rim_hook_reduce",
    "run_cli",
    "theta_level",
    "transpose",
    "vanishing_report",
    "weight_name",
    "witten_rank",
]
