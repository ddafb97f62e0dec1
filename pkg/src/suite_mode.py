"""
Named rule suites for the verify command.

Each suite groups the rules that are checked on one family of drawings,
so `rectcross verify --suite k9` runs every nested-K9 rule at once.
"""
from enum import Enum
from typing import List


class SuiteName(Enum):
    """
    Rule suites, by the drawings they exercise.

    - K6: configuration law and the geometric kite lemmas on nested K6
    - K9: the nested-triangle K9 counting rules
    - K10: the nested K9 plus one vertex cases
    - APPENDIX: peel profiles with a non-triangular second hull
    - ALL: every rule in the table
    """

    K6 = "k6"
    K9 = "k9"
    K10 = "k10"
    APPENDIX = "appendix"
    ALL = "all"

    @classmethod
    def from_string(cls, suite_str: str) -> 'SuiteName':
        """
        Convert string to SuiteName enum.

        Args:
            suite_str: Suite name, case-insensitive

        Raises:
            ValueError: If suite_str names no suite
        """
        suite_lower = suite_str.strip().lower()
        for suite in cls:
            if suite.value == suite_lower:
                return suite

        valid_suites = [suite.value for suite in cls]
        raise ValueError(
            f"Invalid suite: {suite_str}. "
            f"Must be one of {valid_suites}"
        )

    def __str__(self) -> str:
        return self.value

    def description(self) -> str:
        descriptions = {
            SuiteName.K6: "Nested K6: configuration law, barrier, kite, CCC, containment",
            SuiteName.K9: "Nested K9: two-colour, nine-crossing and optimum rules",
            SuiteName.K10: "K10: white vertex and triangle-triangle-quadrilateral cases",
            SuiteName.APPENDIX: "Hexagonal, pentagonal and quadrilateral second hulls",
            SuiteName.ALL: "Every rule",
        }
        return descriptions[self]

    def rule_ids(self) -> List[str]:
        """Rule identifiers in this suite, in run order."""
        if self is SuiteName.ALL:
            from lemma_verify import RULE_TABLE

            return RULE_TABLE.ids()
        return list(_SUITES[self])


_SUITES = {
    SuiteName.K6: (
        "non_concentric_k6",
        "configuration_law",
        "k5_principle",
        "barrier",
        "kite",
        "ccc",
        "containment",
        "shared_labels",
    ),
    SuiteName.K9: (
        "k5_principle",
        "two_colour",
        "rb_gg_nine",
        "rb_rg_nine",
        "internal_nine",
        "k9_concentric_optimum",
        "nine_max",
    ),
    SuiteName.K10: ("ttq_62", "white_in_blue", "white_in_green"),
    SuiteName.APPENDIX: ("guilty_hull6", "guilty_hull5", "quad_second_hull_38"),
}
