"""
Crossing-number bounds for complete graphs, in exact integer/rational arithmetic.

- jensen_upper: closed-form crossing count of an explicit drawing family
- subgraph_lower_bound: every K_a inside K_n carries cr(K_a) crossings, and
  each crossing of K_n lies in C(n-4, a-4) of those subgraphs
- recursive_lower_bound: the a = n-1 case iterated from a known base value
- ratio_lower_bound: a lower bound divided by C(n,4), the quantity whose
  limit is bracketed by nu_star_bracket
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Set, Tuple

from errors import DomainError
from geometry_core import fraction_to_decimal

logger = logging.getLogger(__name__)

# Exact rectilinear crossing numbers of K_3..K_10
KNOWN_VALUES: Dict[int, int] = {3: 0, 4: 0, 5: 1, 6: 3, 7: 9, 8: 19, 9: 36, 10: 62}

BASE_N = 10
BASE_CR = 62
BRACKET_N = 400
NU_STAR_UPPER = Fraction(6467, 16848)


def _ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


def jensen_upper(n: int) -> int:
    """
    Crossings of Jensen's drawing of K_n.

    Raises:
        DomainError: If n < 3
    """
    if n < 3:
        raise DomainError(f"jensen_upper needs n >= 3, got {n}")
    t = (n - 7) // 3
    return (7 * n**4 - 56 * n**3 + 128 * n**2 + 48 * n * t + 108) // 432


def subgraph_lower_bound(n: int, a: int, cr_a: int) -> int:
    """
    Lower bound on cr(K_n) from the crossing number of K_a.

    Returns:
        ceil(cr_a * C(n, a) / C(n-4, a-4))

    Raises:
        DomainError: Unless 5 <= a <= n and cr_a >= 0
    """
    if a < 5:
        raise DomainError(f"subgraph size must be at least 5, got {a}")
    if a > n:
        raise DomainError(f"subgraph size {a} exceeds n={n}")
    if cr_a < 0:
        raise DomainError(f"crossing number cannot be negative: {cr_a}")
    return _ceil_div(cr_a * comb(n, a), comb(n - 4, a - 4))


def ratio_lower_bound(n: int, cr_lower: int) -> Fraction:
    """
    cr_lower / C(n, 4) as an exact rational.

    Raises:
        DomainError: If n < 4
    """
    if n < 4:
        raise DomainError(f"ratio needs n >= 4, got {n}")
    return Fraction(cr_lower, comb(n, 4))


@dataclass(frozen=True)
class BoundsRow:
    n: int
    lower: int
    jensen_upper: int
    ratio: Fraction


class BoundsTable:
    """Rows n -> (lower, jensen_upper, ratio), in increasing n."""

    COLUMNS = ("n", "lower", "jensen_upper", "ratio", "ratio_fraction")

    def __init__(self, rows: List[BoundsRow]) -> None:
        self.rows: Dict[int, BoundsRow] = {row.n: row for row in rows}

    def __getitem__(self, n: int) -> BoundsRow:
        return self.rows[n]

    def __iter__(self) -> Iterator[BoundsRow]:
        return iter(self.rows.values())

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def last(self) -> BoundsRow:
        return self.rows[max(self.rows)]

    def to_delimited(self, delimiter: str = ",", places: int = 10, header: bool = True) -> str:
        """
        Export as delimited text, one row per n.

        Columns: n, lower, jensen_upper, ratio (fixed decimal places),
        ratio as an exact fraction.
        """
        lines = [delimiter.join(self.COLUMNS)] if header else []
        for row in self:
            lines.append(
                delimiter.join(
                    (
                        str(row.n),
                        str(row.lower),
                        str(row.jensen_upper),
                        fraction_to_decimal(row.ratio, places),
                        f"{row.ratio.numerator}/{row.ratio.denominator}",
                    )
                )
            )
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=32)
def _recursion(n_max: int, base_n: int, base_cr: int) -> Tuple[int, ...]:
    values = [base_cr]
    for n in range(base_n + 1, n_max + 1):
        values.append(subgraph_lower_bound(n, n - 1, values[-1]))
    return tuple(values)


def recursive_lower_bound(n_max: int, base_n: int = BASE_N, base_cr: int = BASE_CR) -> BoundsTable:
    """
    Recursive ceiling bound b(n) = ceil(b(n-1) * n / (n-4)) from b(base_n) = base_cr.

    Raises:
        DomainError: If n_max < base_n or base_n < 5
    """
    if base_n < 5:
        raise DomainError(f"base n must be at least 5, got {base_n}")
    if n_max < base_n:
        raise DomainError(f"n_max={n_max} is below the base n={base_n}")
    values = _recursion(n_max, base_n, base_cr)
    rows = [
        BoundsRow(n, lower, jensen_upper(n), ratio_lower_bound(n, lower))
        for n, lower in zip(range(base_n, n_max + 1), values)
    ]
    logger.debug("recursive table %d..%d from cr(K%d)=%d", base_n, n_max, base_n, base_cr)
    return BoundsTable(rows)


def lower_bound(n: int) -> int:
    """Best lower bound on cr(K_n): exact for n <= 10, recursive above."""
    if n in KNOWN_VALUES:
        return KNOWN_VALUES[n]
    if n < 3:
        return 0
    return _recursion(n, BASE_N, BASE_CR)[-1]


def nu_star_bracket() -> Tuple[Fraction, Fraction]:
    """Lower and upper bounds on the limit of cr(K_n) / C(n,4)."""
    lower = recursive_lower_bound(BRACKET_N).last.ratio
    return (lower, NU_STAR_UPPER)


def hypothetical_ratio(base_n: int, base_cr: int, n_max: int = BRACKET_N) -> Fraction:
    """Ratio bound at n_max if cr(K_base_n) were base_cr."""
    return recursive_lower_bound(n_max, base_n, base_cr).last.ratio


def k11_candidates() -> Set[int]:
    """Even values between the K11 lower bound and Jensen's K11 drawing."""
    lower = recursive_lower_bound(11)[11].lower
    return {c for c in range(lower, jensen_upper(11) + 1) if c % 2 == 0}
