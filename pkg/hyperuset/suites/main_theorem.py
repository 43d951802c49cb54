"""verify-main: every admissible U-set lies in the orbit of the base eta map."""

from typing import Any

from hyperuset.core.counting import u_count_closed
from hyperuset.eta.orbit import u_orbit
from hyperuset.eta.usets import enumerate_admissible_u, is_admissible_size, sorted_usets
from hyperuset.groups.symplectic import order_formulas
from hyperuset.suites.base import Check, Suite, SuiteResult


class MainTheoremSuite(Suite):
    """Orbit enumeration against the admissible family and both counting formulas."""

    @property
    def name(self) -> str:
        return "verify-main"

    @property
    def description(self) -> str:
        return "u_orbit(g) equals enumerate_admissible_u(g), with size 2^{g-1}(2^g+1)"

    def run(self, **kwargs: Any) -> SuiteResult:
        """
        Args:
            g: genus, 1 <= g <= 4
        """
        g = int(kwargs["g"])
        orbit = u_orbit(g)
        admissible = enumerate_admissible_u(g)
        quotient = order_formulas(g).quotient

        checks = [
            Check(
                name="orbit_equals_admissible",
                passed=orbit == admissible,
                detail={
                    "missing": [u.to_json() for u in sorted_usets(admissible - orbit)],
                    "extra": [u.to_json() for u in sorted_usets(orbit - admissible)],
                },
            ),
            Check(
                name="orbit_size_equals_quotient",
                passed=len(orbit) == quotient,
                detail={"orbit_size": len(orbit), "quotient": quotient},
            ),
            Check(
                name="admissible_count_closed_form",
                passed=len(admissible) == u_count_closed(g),
                detail={"admissible": len(admissible), "closed_form": u_count_closed(g)},
            ),
            Check(
                name="orbit_congruence",
                passed=all(u.mask >> (2 * g + 1) & 1 and is_admissible_size(g, u.size) for u in orbit),
            ),
        ]
        return self.conclude(
            checks,
            f"orbit of size {len(orbit)} at g={g}",
            g=g,
            orbit_size=len(orbit),
            quotient=quotient,
            orbit=[u.to_json() for u in sorted_usets(orbit)],
        )
