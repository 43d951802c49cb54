"""Orbit of the base U-set under Sp_{2g}(F_2), and its stabilizer."""

import logging
from collections import deque

import numpy as np

from hyperuset.core.gb_group import inf_bit
from hyperuset.errors import GenusLimitError, InternalError, InvalidInputError
from hyperuset.eta.maps import EtaMap, base_eta, transform_eta
from hyperuset.eta.usets import USet, u_set
from hyperuset.groups.f2 import all_vectors, enumerate_sp_f2, j_form_f2, transvection_generators

logger = logging.getLogger(__name__)

ORBIT_LIMIT = 4
STABILIZER_LIMIT = 2


def _odd_mask(g: int, rows: np.ndarray) -> int:
    """U-set mask of eta images given as rows of doubled coordinates."""
    odd = (rows[:, :g] * rows[:, g:]).sum(axis=1) % 2
    mask = 1 << inf_bit(g)
    for i in np.flatnonzero(odd):
        mask |= 1 << int(i)
    return mask


def u_orbit_representatives(g: int) -> dict[USet, EtaMap]:
    """
    Breadth-first closure of u_set(base_eta(g)) under the transvections, one eta map per U-set.

    The state is the U-set alone. Conjugating a transvection by any symplectic map gives
    another transvection, so the set of U-sets one step away does not depend on which eta
    representative is stored.
    """
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > ORBIT_LIMIT:
        raise GenusLimitError(g, ORBIT_LIMIT, "u_orbit")
    gens = transvection_generators(g)
    actions = [(m, m.inverse_transpose().array) for m in gens]
    start = base_eta(g)
    reps: dict[USet, EtaMap] = {u_set(start): start}
    seen = {u.mask for u in reps}
    queue = deque([start])
    while queue:
        eta = queue.popleft()
        rows = np.stack([xi.vector() for xi in eta.images]).astype(np.int64)
        for gen, inv_t in actions:
            mask = _odd_mask(g, rows @ inv_t.T % 2)
            if mask in seen:
                continue
            moved = transform_eta(gen, eta)
            u = u_set(moved)
            if u.mask != mask:
                raise InternalError(f"U-set of transformed eta {u} disagrees with the direct parity scan")
            reps[u] = moved
            seen.add(mask)
            queue.append(moved)
        logger.debug("u_orbit g=%d: %d U-sets, frontier %d", g, len(reps), len(queue))
    return reps


def u_orbit(g: int) -> set[USet]:
    """The distinct U-sets reachable from the base eta map; g <= 4."""
    return set(u_orbit_representatives(g))


def stabilizer_order(g: int) -> int:
    """Number of elements of Sp_{2g}(F_2) fixing u_set(base_eta(g)), by exhaustive scan; g <= 2."""
    if g > STABILIZER_LIMIT:
        raise GenusLimitError(g, STABILIZER_LIMIT, "stabilizer_order")
    mats = enumerate_sp_f2(g)
    eta = base_eta(g)
    target = u_set(eta).mask
    j = j_form_f2(g).astype(np.int64)
    inv_t = j @ mats @ j % 2
    rows = all_vectors(g)[list(eta.codes)]
    moved = np.einsum("vj,kij->kvi", rows, inv_t) % 2
    return sum(1 for k in range(moved.shape[0]) if _odd_mask(g, moved[k]) == target)
