"""Sp_{2g}(Z), its reduction Sp_{2g}(F_2), and the action on the Siegel half-space."""

from hyperuset.groups.f2 import SpF2Matrix, enumerate_parity_group, transvection_generators
from hyperuset.groups.siegel import SiegelPoint, act_on_siegel
from hyperuset.groups.symplectic import (
    SymplecticMatrix,
    act_on_characteristic,
    is_gamma2,
    is_gamma12,
    order_formulas,
    reduce_mod2,
)
from hyperuset.groups.words import random_word

__all__ = [
    "SpF2Matrix",
    "enumerate_parity_group",
    "transvection_generators",
    "SiegelPoint",
    "act_on_siegel",
    "SymplecticMatrix",
    "act_on_characteristic",
    "is_gamma2",
    "is_gamma12",
    "order_formulas",
    "reduce_mod2",
    "random_word",
]
