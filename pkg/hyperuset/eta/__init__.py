"""Eta maps, U-sets and the orbit enumeration of admissible U-sets."""

from hyperuset.eta.maps import EtaMap, EtaReport, base_eta, eta_of_class, transform_eta, validate_eta
from hyperuset.eta.orbit import stabilizer_order, u_orbit, u_orbit_representatives
from hyperuset.eta.usets import USet, enumerate_admissible_u, t_set, u_from_t, u_set

__all__ = [
    "EtaMap",
    "EtaReport",
    "base_eta",
    "eta_of_class",
    "transform_eta",
    "validate_eta",
    "stabilizer_order",
    "u_orbit",
    "u_orbit_representatives",
    "USet",
    "enumerate_admissible_u",
    "t_set",
    "u_from_t",
    "u_set",
]
