from weightedkstab.measures.densities import (
    MeasureKind,
    SignedMeasure,
    nu_density,
    mu_density,
    measures,
    logpair_measures,
    logpair_mu_folded_formula,
    logpair_mu_one,
    quadric_measures,
    quadric_mu_density,
    quadric_mu_folded_formula,
)
from weightedkstab.measures.catalog import CaseData, catalog, get_case, find_by_mori_mukai, lookup

__all__ = [
    "MeasureKind",
    "SignedMeasure",
    "nu_density",
    "mu_density",
    "measures",
    "logpair_measures",
    "logpair_mu_folded_formula",
    "logpair_mu_one",
    "quadric_measures",
    "quadric_mu_density",
    "quadric_mu_folded_formula",
    "CaseData",
    "catalog",
    "get_case",
    "find_by_mori_mukai",
    "lookup",
]
