"""p-polygons: Hamiltonian cycles through p equally spaced points on a circle.

Vertices are plain indices ``0..p-1``; vertex ``k`` stands for the point
``exp(2*pi*i*k/p)``. Nothing in this module touches coordinates.

Two cycles are *equivalent* when one is a plane rotation of the other (after
possibly changing the start vertex or traversal direction). Mirror images are
generally not equivalent. Equivalence classes are identified by the
lexicographically least step sequence, see :func:`canonical_key`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

MIN_PRIME = 5
MAX_PRIME = 31


class PolygonError(ValueError):
    """Base class for invalid polygon input."""


class NotPrime(PolygonError):
    pass


class NotAPermutation(PolygonError):
    pass


class WrongLength(PolygonError):
    pass


class InvalidSteps(PolygonError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class PrimeOrder:
    """A prime number of vertices, ``5 <= p <= 31``."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NotPrime(f"p must be an integer, got {self.p!r}")
        if not is_prime(self.p) or self.p < MIN_PRIME:
            raise NotPrime(f"p must be prime >= {MIN_PRIME}, got {self.p}")
        if self.p > MAX_PRIME:
            raise NotPrime(f"p must be <= {MAX_PRIME}, got {self.p}")

    def __int__(self) -> int:
        return self.p

    @property
    def half(self) -> int:
        """Number of mirror pairs ``(p-1)/2``."""
        return (self.p - 1) // 2


OrderLike = Union[PrimeOrder, int]


def as_order(order: OrderLike) -> PrimeOrder:
    return order if isinstance(order, PrimeOrder) else PrimeOrder(order)


class SymmetryClass(enum.Enum):
    ASYMMETRIC = "asymmetric"
    ONE_AXIS = "one-axis"
    REGULAR = "regular"

    def axis_count(self, p: int) -> int:
        return {SymmetryClass.ASYMMETRIC: 0, SymmetryClass.ONE_AXIS: 1}.get(self, p)


@dataclass(frozen=True)
class VertexCycle:
    order: PrimeOrder
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.order.p
        if len(self.vertices) != p:
            raise WrongLength(f"expected {p} vertices, got {len(self.vertices)}")
        if sorted(self.vertices) != list(range(p)):
            raise NotAPermutation(f"{self.vertices} is not a permutation of 0..{p - 1}")

    def __str__(self) -> str:
        return format_cycle(self.vertices)

    def edges(self) -> frozenset[frozenset[int]]:
        """Undirected edge set."""
        v = self.vertices
        return frozenset(frozenset((v[i - 1], v[i])) for i in range(len(v)))


@dataclass(frozen=True, order=True)
class StepSequence:
    """Cyclic list of successive vertex differences mod p.

    Ordering compares ``steps`` lexicographically, which is the order used to
    pick canonical keys (``order`` is compared first and is equal whenever
    comparing sequences of the same polygon size).
    """

    order: PrimeOrder
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.order.p
        if len(self.steps) != p:
            raise WrongLength(f"expected {p} steps, got {len(self.steps)}")
        if any(not 1 <= d < p for d in self.steps):
            raise InvalidSteps(f"steps must lie in [1, {p - 1}]: {self.steps}")
        seen = set()
        acc = 0
        for d in self.steps:
            acc = (acc + d) % p
            if acc in seen:
                break
            seen.add(acc)
        if len(seen) != p or acc != 0:
            raise InvalidSteps(f"{format_steps(self.steps)} does not visit every vertex once")

    def __str__(self) -> str:
        return format_steps(self.steps)

    def is_constant(self) -> bool:
        return len(set(self.steps)) == 1


# A canonical key is a StepSequence known to be the class minimum.
CanonicalKey = StepSequence


@dataclass(frozen=True)
class DihedralElement:
    """Rotation ``j -> j + k`` or reflection ``j -> c - j`` (mod p)."""

    reflection: bool
    param: int

    @classmethod
    def rotation(cls, k: int) -> "DihedralElement":
        return cls(False, k)

    @classmethod
    def reflect(cls, c: int) -> "DihedralElement":
        return cls(True, c)

    def apply(self, j: int, p: int) -> int:
        return (self.param - j) % p if self.reflection else (j + self.param) % p


def dihedral_elements(p: int) -> list[DihedralElement]:
    return [DihedralElement.rotation(k) for k in range(p)] + [
        DihedralElement.reflect(c) for c in range(p)
    ]


def make_cycle(order: OrderLike, vertices: Iterable[int]) -> VertexCycle:
    return VertexCycle(as_order(order), tuple(vertices))


def steps_of(cycle: VertexCycle) -> StepSequence:
    v = cycle.vertices
    p = cycle.order.p
    steps = tuple((v[(i + 1) % p] - v[i]) % p for i in range(p))
    return StepSequence(cycle.order, steps)


def make_steps(order: OrderLike, steps: Iterable[int]) -> StepSequence:
    return StepSequence(as_order(order), tuple(steps))


def cycle_from_steps(seq: StepSequence, start: int = 0) -> VertexCycle:
    p = seq.order.p
    out = [start % p]
    for d in seq.steps[:-1]:
        out.append((out[-1] + d) % p)
    return VertexCycle(seq.order, tuple(out))


def transform(cycle: VertexCycle, element: DihedralElement) -> VertexCycle:
    p = cycle.order.p
    return VertexCycle(cycle.order, tuple(element.apply(j, p) for j in cycle.vertices))


def _rotations(s: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [s[i:] + s[:i] for i in range(len(s))]


def _reverse_negate(s: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(p - d for d in reversed(s))


def _canonical_steps(s: tuple[int, ...], p: int) -> tuple[int, ...]:
    return min(min(_rotations(s)), min(_rotations(_reverse_negate(s, p))))


def canonicalize(seq: StepSequence) -> CanonicalKey:
    """Least of the 2p shifts of ``seq`` and of its reversal-with-negation."""
    return StepSequence(seq.order, _canonical_steps(seq.steps, seq.order.p))


def canonical_key(cycle: VertexCycle) -> CanonicalKey:
    return canonicalize(steps_of(cycle))


def mirror_key(cycle: VertexCycle) -> CanonicalKey:
    """Canonical key of the mirror image (any reflection gives the same key)."""
    p = cycle.order.p
    negated = tuple(p - d for d in steps_of(cycle).steps)
    return StepSequence(cycle.order, _canonical_steps(negated, p))


def axis_count(cycle: VertexCycle) -> int:
    """Number of reflections ``j -> c - j`` that fix the undirected edge set."""
    p = cycle.order.p
    v = cycle.vertices
    # edge {a, b} is identified by the pair (a + b, |a - b| folded) -- cheaper
    # than frozensets; reflection c maps it to (2c - (a + b), same folded diff)
    edges = set()
    for i in range(p):
        a, b = v[i - 1], v[i]
        diff = (a - b) % p
        edges.add(((a + b) % p, min(diff, p - diff)))
    count = 0
    for c in range(p):
        if all(((2 * c - s) % p, d) in edges for s, d in edges):
            count += 1
    return count


def symmetry_class(cycle: VertexCycle) -> SymmetryClass:
    steps = steps_of(cycle)
    if steps.is_constant():
        return SymmetryClass.REGULAR
    if mirror_key(cycle) == canonicalize(steps):
        return SymmetryClass.ONE_AXIS
    return SymmetryClass.ASYMMETRIC


def align_axis(cycle: VertexCycle) -> VertexCycle:
    """Rotate a symmetric cycle so that one of its axes passes through vertex 0.

    Asymmetric cycles are returned unchanged.
    """
    p = cycle.order.p
    edges = cycle.edges()
    for c in range(p):
        image = frozenset(frozenset((c - a) % p for a in e) for e in edges)
        if image == edges:
            # rotating by k turns reflection c into reflection c + 2k
            k = (-c * (p + 1) // 2) % p
            return transform(cycle, DihedralElement.rotation(k))
    return cycle


def format_cycle(vertices: Iterable[int]) -> str:
    return "(" + ",".join(str(v) for v in vertices) + ")"


def format_steps(steps: Iterable[int]) -> str:
    return "[" + ",".join(str(d) for d in steps) + "]"


def _parse_ints(text: str, open_: str, close: str) -> list[int]:
    text = text.strip()
    if not (text.startswith(open_) and text.endswith(close)):
        raise PolygonError(f"expected {open_}...{close}, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise PolygonError(f"bad integer list {text!r}") from exc


def parse_cycle(text: str) -> VertexCycle:
    """Parse ``"(0,1,3,2,6,4,5)"``; p is the number of entries."""
    values = _parse_ints(text, "(", ")")
    return make_cycle(len(values), values)


def parse_steps(text: str) -> StepSequence:
    """Parse ``"[1,2,6,4,5,1,2]"``; p is the number of entries."""
    values = _parse_ints(text, "[", "]")
    return make_steps(len(values), values)
