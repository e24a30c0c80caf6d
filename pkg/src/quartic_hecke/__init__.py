"""Value distribution of quartic Hecke L-functions over Q(i).

Exact Gaussian-integer arithmetic, the quartic residue symbol, the
family of quartic characters chi_c, smoothed L-values, the two
independent characteristic-function routes, and the inverse transform
back to a density.
"""

from .gaussint import (
    GaussInt,
    PrimeIdealRec,
    GaussFactorization,
    FamilyElement,
    norm,
    divrem,
    gcd,
    first_quadrant,
    is_odd,
    is_primary,
    primary_normalize,
    factor,
    is_squarefree,
    primes_up_to,
    enumerate_C,
    first_quadrant_by_norm,
)
from .quartic import (
    QuarticValue,
    symbol_prime_oracle,
    unit_supplement,
    ramified_supplement,
    symbol,
    chi_c,
)
from .lfunc import (
    LValueParams,
    EmpiricalSample,
    FamilyLTable,
    l_value,
    script_l,
    empirical_char_fn,
    s_count,
    s_star,
    unit_orbit_class_count,
    zeta_k2,
    residue_zeta_k,
    density_constant,
)
from .charfn import (
    CharFnParams,
    SeriesCutoffs,
    DecayReport,
    h_coeff,
    lambda_y,
    local_factor,
    prefactor,
    phi_sigma,
    phi_grid,
    phi_grid_evaluator,
    mtilde_series,
    band_value,
    band_primes,
    decay_check,
)
from .density import (
    GridSpec,
    DistributionTable,
    inverse_transform,
    cdf_eval,
    ks_distance,
)

__all__ = [
    "GaussInt",
    "PrimeIdealRec",
    "GaussFactorization",
    "FamilyElement",
    "norm",
    "divrem",
    "gcd",
    "first_quadrant",
    "is_odd",
    "is_primary",
    "primary_normalize",
    "factor",
    "is_squarefree",
    "primes_up_to",
    "enumerate_C",
    "first_quadrant_by_norm",
    "QuarticValue",
    "symbol_prime_oracle",
    "unit_supplement",
    "ramified_supplement",
    "symbol",
    "chi_c",
    "LValueParams",
    "EmpiricalSample",
    "FamilyLTable",
    "l_value",
    "script_l",
    "empirical_char_fn",
    "s_count",
    "s_star",
    "unit_orbit_class_count",
    "zeta_k2",
    "residue_zeta_k",
    "density_constant",
    "CharFnParams",
    "SeriesCutoffs",
    "DecayReport",
    "h_coeff",
    "lambda_y",
    "local_factor",
    "prefactor",
    "phi_sigma",
    "phi_grid",
    "phi_grid_evaluator",
    "mtilde_series",
    "band_value",
    "band_primes",
    "decay_check",
    "GridSpec",
    "DistributionTable",
    "inverse_transform",
    "cdf_eval",
    "ks_distance",
]

__version__ = "0.1.0"
