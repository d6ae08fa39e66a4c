"""Fidelity bounds, enumerator averages and error exponents for random quantum stabilizer and CSS codes."""

from .codes import (
    CapExceededError,
    EnumeratorPair,
    Gf4AdditiveCode,
    BinaryCode,
    StandardArray,
    WeightDistribution,
    enumerator_pair,
    five_qubit_code,
    macwilliams,
    weight_enumerator,
)
from .ensembles import EnsembleSpec, average_enumerators, expurgate
from .exactmath import LogReal, gaussian_binomial, krawtchouk
from .finite_bounds import fidelity_bound, gv_distance_css, gv_distance_stabilizer, max_rate_for_target, reform_bound
from .asymptotics import capacity_lower, error_exponent, explicit_stabilizer_exponent, ExponentSpec

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "EnumeratorPair",
    "Gf4AdditiveCode",
    "BinaryCode",
    "StandardArray",
    "WeightDistribution",
    "enumerator_pair",
    "five_qubit_code",
    "macwilliams",
    "weight_enumerator",
    "EnsembleSpec",
    "average_enumerators",
    "expurgate",
    "LogReal",
    "gaussian_binomial",
    "krawtchouk",
    "fidelity_bound",
    "gv_distance_css",
    "gv_distance_stabilizer",
    "max_rate_for_target",
    "reform_bound",
    "capacity_lower",
    "error_exponent",
    "explicit_stabilizer_exponent",
    "ExponentSpec",
]
