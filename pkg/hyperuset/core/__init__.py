"""Exact combinatorics: G_B, theta characteristics and the counting identities."""

from hyperuset.core.characteristics import Characteristic, enumerate_by_parity, pairing, parity
from hyperuset.core.counting import CountQuery, s_count, u_count_closed
from hyperuset.core.gb_group import INF, BranchSet, GBClass, canonical_class, enumerate_gb, symm_diff

__all__ = [
    "INF",
    "BranchSet",
    "GBClass",
    "canonical_class",
    "enumerate_gb",
    "symm_diff",
    "Characteristic",
    "enumerate_by_parity",
    "pairing",
    "parity",
    "CountQuery",
    "s_count",
    "u_count_closed",
]
