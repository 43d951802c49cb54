"""Binomial sums over residue classes, S(n, d, m), and the U-set count closed form."""

from math import comb

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from hyperuset.errors import InvalidInputError


class CountQuery(BaseModel):
    """Parameters of S(n, d, m): subsets of {1..n} with cardinality k = d (mod m)."""

    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    d: NonNegativeInt
    m: int = Field(ge=2)


def s_count(query: CountQuery) -> int:
    """Exact sum of C(n, k) over 0 <= k <= n with k = d (mod m)."""
    start = query.d % query.m
    return sum(comb(query.n, k) for k in range(start, query.n + 1, query.m))


def u_count_closed(g: int) -> int:
    """2^{g-1} (2^g + 1): the number of admissible U-sets in genus g."""
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    return (1 << (g - 1)) * ((1 << g) + 1)


def u_count_direct(g: int) -> int:
    """S(2g+1, g, 4) by summation; agrees with u_count_closed."""
    return s_count(CountQuery(n=2 * g + 1, d=g, m=4))
