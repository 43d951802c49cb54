"""orders --enumerate: the order formulas against exhaustive enumeration of Sp_{2g}(F_2)."""

from typing import Any

from hyperuset.core.counting import u_count_closed
from hyperuset.errors import GenusLimitError
from hyperuset.eta.orbit import stabilizer_order
from hyperuset.groups.f2 import (
    EXHAUSTIVE_LIMIT,
    enumerate_sp_f2,
    generated_group_order,
    has_even_diagonals,
    parity_preserving_mask,
    transvection_generators,
)
from hyperuset.groups.symplectic import order_formulas
from hyperuset.suites.base import Check, Suite, SuiteResult


class GroupOrderSuite(Suite):
    """Formulas, exhaustive counts, transvection closure and the U-set stabilizer, g <= 2."""

    @property
    def name(self) -> str:
        return "orders"

    @property
    def description(self) -> str:
        return "#Sp_{2g}(F_2) and its parity-preserving subgroup by formula and by enumeration"

    def run(self, **kwargs: Any) -> SuiteResult:
        g = int(kwargs["g"])
        if g > EXHAUSTIVE_LIMIT:
            raise GenusLimitError(g, EXHAUSTIVE_LIMIT, "orders --enumerate")
        formulas = order_formulas(g)
        mats = enumerate_sp_f2(g)
        preserving = parity_preserving_mask(mats, g)
        group_order, preserving_order = int(mats.shape[0]), int(preserving.sum())
        closure = generated_group_order(transvection_generators(g))
        diagonal = [has_even_diagonals(m) for m in mats]
        stabilizer = stabilizer_order(g)
        disagreements = sum(1 for d, p in zip(diagonal, preserving, strict=True) if d != bool(p))

        checks = [
            Check(
                name="sp_order",
                passed=group_order == formulas.sp_f2,
                detail={"enumerated": group_order, "formula": formulas.sp_f2},
            ),
            Check(
                name="parity_preserving_order",
                passed=preserving_order == formulas.o_plus,
                detail={"enumerated": preserving_order, "formula": formulas.o_plus},
            ),
            Check(
                name="transvection_closure",
                passed=closure == formulas.sp_f2,
                detail={"closure": closure},
            ),
            Check(
                name="diagonal_test_matches_parity",
                passed=disagreements == 0,
                detail={"disagreements": disagreements},
            ),
            Check(
                name="u_set_stabilizer",
                passed=stabilizer == preserving_order,
                detail={"stabilizer": stabilizer},
            ),
            Check(
                name="quotient_equals_u_count",
                passed=formulas.quotient == group_order // preserving_order == u_count_closed(g),
                detail={"quotient": formulas.quotient, "u_count": u_count_closed(g)},
            ),
        ]
        return self.conclude(
            checks,
            f"#Sp={group_order}, #parity-preserving={preserving_order} at g={g}",
            g=g,
            **formulas.to_json(),
        )
