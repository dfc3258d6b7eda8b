from weightedkstab.weights.spec import (
    WeightSpec,
    Constant,
    PolynomialWeight,
    CoshFamily,
    Sech,
    ExpSum,
    MollifiedIndicator,
    eval_weight,
    smooth_step,
    validate_positive_on,
)
from weightedkstab.weights.quadrature import QuadratureResult, gauss_legendre_rule, gauss_legendre_integrate
from weightedkstab.weights.closed_forms import (
    ClosedFormCase,
    closed_form_case,
    exp_moment,
    mu_ga_asymptotic,
    mu_ga_closed_form,
    mu_ga_series,
)
from weightedkstab.weights.pairing import PairingMethod, PairingResult, density_values, pair, weighted_mass
from weightedkstab.weights.parser import parse_weight, format_weight

__all__ = [
    "WeightSpec",
    "Constant",
    "PolynomialWeight",
    "CoshFamily",
    "Sech",
    "ExpSum",
    "MollifiedIndicator",
    "eval_weight",
    "smooth_step",
    "validate_positive_on",
    "QuadratureResult",
    "gauss_legendre_rule",
    "gauss_legendre_integrate",
    "ClosedFormCase",
    "closed_form_case",
    "exp_moment",
    "mu_ga_asymptotic",
    "mu_ga_closed_form",
    "mu_ga_series",
    "PairingMethod",
    "PairingResult",
    "density_values",
    "pair",
    "weighted_mass",
    "parse_weight",
    "format_weight",
]
