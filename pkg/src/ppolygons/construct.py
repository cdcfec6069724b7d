"""Representatives of every class with at least one symmetry axis.

Each representative is symmetric about the axis through vertex 0. It is grown
as an open chain ``i - 0 - (p - i)`` and then extended by attaching one mirror
pair ``{j, p - j}`` at a time to both ends, either *straight* (``j`` joins the
left end) or *crossed* (``p - j`` joins the left end). When every pair is used
the two ends are joined across the axis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import OrderLike, PolygonError, PrimeOrder, SymmetryClass, VertexCycle, as_order
from .core import StepSequence, cycle_from_steps, symmetry_class

STRAIGHT = False
CROSSED = True


class InvalidPlan(PolygonError):
    pass


@dataclass(frozen=True)
class ConstructionPlan:
    order: PrimeOrder
    pair_order: tuple[int, ...]
    orientations: tuple[bool, ...]

    def __post_init__(self) -> None:
        m = self.order.half
        if sorted(self.pair_order) != list(range(1, m + 1)):
            raise InvalidPlan(f"pair_order {self.pair_order} is not a permutation of 1..{m}")
        if len(self.orientations) != m - 1:
            raise InvalidPlan(f"expected {m - 1} orientation bits, got {len(self.orientations)}")


def make_plan(order: OrderLike, pair_order, orientations) -> ConstructionPlan:
    return ConstructionPlan(as_order(order), tuple(pair_order), tuple(bool(b) for b in orientations))


def build(plan: ConstructionPlan) -> VertexCycle:
    p = plan.order.p
    left = [plan.pair_order[0]]
    for i, crossed in zip(plan.pair_order[1:], plan.orientations):
        left.append(p - i if crossed else i)
    right = [(p - x) % p for x in left]
    return VertexCycle(plan.order, tuple(reversed(left)) + (0,) + tuple(right))


def all_plans(p: OrderLike) -> Iterator[ConstructionPlan]:
    """Every plan, ``m! * 2^(m-1)`` of them for ``m = (p-1)/2``.

    Lexicographic in pair order, then in orientation bits (straight first).
    """
    order = as_order(p)
    m = order.half
    for pairs in itertools.permutations(range(1, m + 1)):
        for bits in itertools.product((STRAIGHT, CROSSED), repeat=m - 1):
            yield ConstructionPlan(order, pairs, bits)


def symmetric_representatives(p: OrderLike) -> list[VertexCycle]:
    return [build(plan) for plan in all_plans(p)]


def regular_representatives(p: OrderLike) -> list[VertexCycle]:
    order = as_order(p)
    return [
        cycle_from_steps(StepSequence(order, (k,) * order.p), 0)
        for k in range(1, order.half + 1)
    ]


def one_axis_representatives(p: OrderLike) -> list[VertexCycle]:
    return [c for c in symmetric_representatives(p) if symmetry_class(c) is SymmetryClass.ONE_AXIS]
