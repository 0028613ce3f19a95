"""Exact extremal set theory under the binomial norm."""

from .core import (
    MAX_N,
    CapacityError,
    Family,
    binomial,
    elements_of,
    layer_profile,
    make_family,
    mask_of,
    power_set,
)
from .measures import extend, norm, rho

__version__ = "0.1.0"

__all__ = [
    "MAX_N",
    "CapacityError",
    "Family",
    "binomial",
    "elements_of",
    "extend",
    "layer_profile",
    "make_family",
    "mask_of",
    "norm",
    "power_set",
    "rho",
]
