from weightedkstab.stability.case import CaseFamily, StabilityCase
from weightedkstab.stability.verdict import (
    Classification,
    StabilityVerdict,
    classify,
    classify_values,
    pairing_along,
)
from weightedkstab.stability.threshold import ThresholdResult, bisection_secant, find_threshold
from weightedkstab.stability.certificate import (
    Certificate,
    candidate_lambdas,
    certify_lambda,
    combined_density,
    insensitivity_certificate,
)
from weightedkstab.stability.destabilize import DestabilizingWeight, destabilizing_weight, quadric_bump
from weightedkstab.stability.logpair import (
    LogPairReport,
    analyze_logpair,
    logpair_t0,
    logpair_t0_interval,
    stabilizing_bump,
)

__all__ = [
    "CaseFamily",
    "StabilityCase",
    "Classification",
    "StabilityVerdict",
    "classify",
    "classify_values",
    "pairing_along",
    "ThresholdResult",
    "bisection_secant",
    "find_threshold",
    "Certificate",
    "candidate_lambdas",
    "certify_lambda",
    "combined_density",
    "insensitivity_certificate",
    "DestabilizingWeight",
    "destabilizing_weight",
    "quadric_bump",
    "LogPairReport",
    "analyze_logpair",
    "logpair_t0",
    "logpair_t0_interval",
    "stabilizing_bump",
]
