"""Closed-form class counts, in exact integer arithmetic.

Naming: ``total`` is the number of rotation classes of all p-polygons,
``regular`` the star polygons (p axes), ``one_axis`` those with exactly one
symmetry axis, ``asymmetric`` those with none and ``at_least_one_axis`` the
sum ``regular + one_axis``. Older write-ups use ``X(p)``/``P(p)`` for total,
``X_p``/``P_r`` for regular, ``X_1``/``P_1`` for one-axis and ``X_0``/``P_0``
for asymmetric.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial

from .core import OrderLike, PolygonError, as_order

# Values that appear in the published results table but disagree with the
# formulas; keyed by (p, column).
PUBLISHED_ERRATA = {(13, "asymmetric"): 1840010}

CSV_COLUMNS = ("p", "total", "regular", "one_axis", "asymmetric", "at_least_one_axis")


class UnsupportedEvenOrder(PolygonError):
    pass


@dataclass(frozen=True)
class OddOrder:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise PolygonError(f"n must be an integer, got {self.n!r}")
        if self.n % 2 == 0:
            raise UnsupportedEvenOrder(f"n must be odd, got {self.n}")
        if self.n < 3:
            raise PolygonError(f"n must be >= 3, got {self.n}")


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    result = n
    for q in _factorize(n):
        result = result // q * (q - 1)
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_all_odd(n: OddOrder | int) -> int:
    """Rotation classes of n-polygons for odd n, by the divisor-sum formula.

    ``(1 / 2n^2) * sum over d | n of phi(n/d)^2 * d! * (n/d)^d``
    """
    n = n if isinstance(n, OddOrder) else OddOrder(n)
    m = n.n
    total = sum(totient(m // d) ** 2 * factorial(d) * (m // d) ** d for d in divisors(m))
    q, r = divmod(total, 2 * m * m)
    assert r == 0, f"divisor sum {total} not divisible by 2n^2 for n={m}"
    return q


def count_all_prime(p: OrderLike) -> int:
    p = as_order(p).p
    num = factorial(p - 1) + (p - 1) ** 2
    q, r = divmod(num, 2 * p)
    assert r == 0, f"(p-1)! + (p-1)^2 not divisible by 2p for p={p}"
    return q


def count_regular(p: OrderLike) -> int:
    return totient(as_order(p).p) // 2


def _symmetric_chain_count(p: int) -> int:
    h = (p - 3) // 2
    return 2**h * factorial(h)


def count_at_least_one_axis(p: OrderLike) -> int:
    p = as_order(p).p
    return (p - 1) // 2 * _symmetric_chain_count(p)


def count_exactly_one_axis(p: OrderLike) -> int:
    p = as_order(p).p
    return (p - 1) // 2 * (_symmetric_chain_count(p) - 1)


def count_asymmetric(p: OrderLike) -> int:
    p = as_order(p).p
    num = (p - 1) ** 2 + factorial(p - 1) - p * (p - 1) * _symmetric_chain_count(p)
    q, r = divmod(num, 2 * p)
    assert r == 0
    return q


@dataclass(frozen=True)
class CensusRow:
    p: int
    total: int
    regular: int
    one_axis: int
    asymmetric: int
    at_least_one_axis: int
    source: str = "formula"
    paper_discrepancies: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.total != self.regular + self.one_axis + self.asymmetric:
            raise AssertionError(f"census row for p={self.p} does not add up: {self}")
        if self.at_least_one_axis != self.regular + self.one_axis:
            raise AssertionError(f"at_least_one_axis mismatch for p={self.p}: {self}")
        if self.asymmetric % 2:
            raise AssertionError(f"odd asymmetric count for p={self.p}: {self}")
        if self.source not in ("formula", "enumeration"):
            raise ValueError(f"unknown source {self.source!r}")

    def counts(self) -> tuple[int, ...]:
        return tuple(getattr(self, c) for c in CSV_COLUMNS)

    def to_dict(self) -> dict:
        d = {c: getattr(self, c) for c in CSV_COLUMNS}
        d["source"] = self.source
        d["paper_discrepancies"] = list(self.paper_discrepancies)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def discrepancies(p: int, counts: dict[str, int]) -> tuple[str, ...]:
    """Notes for every published table value that disagrees with ``counts``."""
    notes = []
    for (q, column), printed in sorted(PUBLISHED_ERRATA.items()):
        if q == p and counts.get(column) is not None and counts[column] != printed:
            notes.append(
                f"p={p} {column}: published table prints {printed}, but "
                f"total - at_least_one_axis = {counts['total']} - "
                f"{counts['at_least_one_axis']} = {counts[column]}; "
                f"the printed value is inconsistent with the subtraction identity"
            )
    return tuple(notes)


def make_row(p: int, total: int, regular: int, one_axis: int, asymmetric: int,
             source: str) -> CensusRow:
    counts = dict(total=total, regular=regular, one_axis=one_axis,
                  asymmetric=asymmetric, at_least_one_axis=regular + one_axis)
    return CensusRow(p=p, source=source, paper_discrepancies=discrepancies(p, counts), **counts)


def census_row(p: OrderLike) -> CensusRow:
    p = as_order(p)
    row = make_row(
        p.p,
        total=count_all_prime(p),
        regular=count_regular(p),
        one_axis=count_exactly_one_axis(p),
        asymmetric=count_asymmetric(p),
        source="formula",
    )
    assert row.at_least_one_axis == count_at_least_one_axis(p)
    assert row.total == count_all_odd(p.p)
    return row
