from ._core import (
    Expr,
    ShockParams,
    System,
    divergence_residual,
    find_multipliers,
    parse,
    shock_ode_residual,
    shock_profile,
    shock_xi_difference,
    symmetry_residual,
    system,
    verify_all,
)

__all__ = [
    "Expr",
    "ShockParams",
    "System",
    "divergence_residual",
    "find_multipliers",
    "parse",
    "shock_ode_residual",
    "shock_profile",
    "shock_xi_difference",
    "symmetry_residual",
    "system",
    "verify_all",
]
