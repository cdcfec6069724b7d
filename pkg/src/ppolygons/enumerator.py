"""Exhaustive enumeration of p-polygons, independent of every formula.

Two modes:

* ``collect`` walks all ``(p-1)!`` orderings that start at vertex 0, reduces
  each to its canonical key and deduplicates. It keeps the class list, so it
  can also report mirror partners. Feasible up to p = 11.
* ``stream`` walks the same space but counts a candidate only if its own step
  sequence already is the canonical key, so nothing has to be stored. Partial
  orderings that some shift already beats are abandoned early. This is the
  mode for p = 13.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .census import CensusRow, make_row
from .core import (
    CanonicalKey,
    OrderLike,
    PolygonError,
    PrimeOrder,
    StepSequence,
    SymmetryClass,
    as_order,
    parse_steps,
)

log = logging.getLogger(__name__)

MAX_COLLECT = 11
MAX_STREAM = 13
PREFIX_LENGTH = 2

_TAGS = {
    _kernels.REGULAR: SymmetryClass.REGULAR,
    _kernels.ONE_AXIS: SymmetryClass.ONE_AXIS,
    _kernels.ASYMMETRIC: SymmetryClass.ASYMMETRIC,
}


class InfeasibleSize(PolygonError):
    pass


@dataclass(frozen=True)
class ClassRecord:
    key: CanonicalKey
    symmetry: SymmetryClass
    mirror: CanonicalKey
    axis_count: int

    def line(self) -> str:
        text = f"{self.key} # symmetry={self.symmetry.value}"
        if self.symmetry is SymmetryClass.ASYMMETRIC:
            text += f" mirror={self.mirror}"
        return text


@dataclass
class EnumerationReport:
    p: int
    row: CensusRow
    mode: str
    elapsed: float
    workers: int = 1
    classes: Optional[list[ClassRecord]] = field(default=None, repr=False)

    def to_dict(self) -> dict:
        d = self.row.to_dict()
        d.update(mode=self.mode, elapsed_ms=int(round(self.elapsed * 1000)), workers=self.workers)
        return d


def _steps(order: PrimeOrder, code: int) -> StepSequence:
    return StepSequence(order, tuple(int(x) for x in _kernels.decode(code, order.p)))


def _tally_row(p: int, regular: int, one_axis: int, asymmetric: int) -> CensusRow:
    return make_row(p, regular + one_axis + asymmetric, regular, one_axis, asymmetric,
                    source="enumeration")


def class_codes(p: OrderLike) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Sorted canonical codes with their mirror codes, tags and axis counts."""
    order = as_order(p)
    if order.p > MAX_COLLECT:
        raise InfeasibleSize(f"collect mode supports p <= {MAX_COLLECT}, got {order.p}")
    codes = np.unique(_kernels.all_canonical_codes(order.p))
    mirrors, tags, axes = _kernels.classify_codes(codes, order.p)
    return codes, mirrors, tags, axes


def enumerate_classes(p: OrderLike, workers: int = 1) -> EnumerationReport:
    """Full class list for p <= 11; p = 13 falls back to streaming counts."""
    order = as_order(p)
    if order.p > MAX_COLLECT:
        if order.p <= MAX_STREAM:
            log.info("p=%d is too large to collect; streaming instead", order.p)
            return enumerate_counts_streaming(order, workers)
        raise InfeasibleSize(f"enumeration supports p <= {MAX_STREAM}, got {order.p}")
    start = time.perf_counter()
    codes, mirrors, tags, axes = class_codes(order)
    keys = {int(c): _steps(order, int(c)) for c in codes}
    classes = [
        ClassRecord(keys[int(c)], _TAGS[int(t)], keys[int(m)], int(a))
        for c, m, t, a in zip(codes, mirrors, tags, axes)
    ]
    counts = np.bincount(tags, minlength=3)
    row = _tally_row(order.p, int(counts[0]), int(counts[1]), int(counts[2]))
    return EnumerationReport(order.p, row, "collect", time.perf_counter() - start, 1, classes)


def _count_chunk(args: tuple[int, np.ndarray, bool]) -> np.ndarray:
    p, chunk, prune = args
    total = np.zeros(3, np.int64)
    for prefix in chunk:
        total += _kernels.count_from_prefix(p, prefix, prune)
    return total


def default_workers() -> int:
    env = os.environ.get("PPOLYGONS_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def enumerate_counts_streaming(p: OrderLike, workers: int = 1, prune: bool = True,
                               prefix_length: int = PREFIX_LENGTH) -> EnumerationReport:
    """Count classes without storing keys.

    The ordering space is split by step prefixes of ``prefix_length``; each
    worker process gets a fixed share of prefixes and returns a partial tally.
    Tallies are merged by addition, so the result does not depend on
    ``workers``.
    """
    order = as_order(p)
    if order.p > MAX_STREAM:
        raise InfeasibleSize(f"enumeration supports p <= {MAX_STREAM}, got {order.p}")
    if workers < 1:
        raise ValueError("workers must be positive")
    start = time.perf_counter()
    pre = _kernels.prefixes(order.p, min(prefix_length, order.p - 2))
    chunks = [(order.p, pre[i::workers], prune) for i in range(workers)]
    if workers == 1:
        parts = [_count_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_chunk, chunks))
    tally = np.sum(parts, axis=0)
    row = _tally_row(order.p, int(tally[0]), int(tally[1]), int(tally[2]))
    elapsed = time.perf_counter() - start
    log.info("p=%d streamed in %.2fs with %d workers", order.p, elapsed, workers)
    return EnumerationReport(order.p, row, "stream", elapsed, workers)


def chirality_pairs(p: OrderLike) -> list[tuple[CanonicalKey, CanonicalKey]]:
    """Each asymmetric class with its mirror class, smaller key first."""
    report = enumerate_classes(p)
    if report.classes is None:
        raise InfeasibleSize(f"chirality pairing needs collect mode (p <= {MAX_COLLECT})")
    pairs = []
    for rec in report.classes:
        if rec.symmetry is SymmetryClass.ASYMMETRIC and rec.key < rec.mirror:
            pairs.append((rec.key, rec.mirror))
    return pairs


def export_classes(classes: list[ClassRecord]) -> str:
    return "".join(rec.line() + "\n" for rec in classes)


def parse_class_line(line: str) -> tuple[StepSequence, str]:
    """Inverse of :meth:`ClassRecord.line` for the key and symmetry tag."""
    key_text, _, rest = line.partition("#")
    tag = rest.split("symmetry=", 1)[1].split()[0]
    return parse_steps(key_text), tag



def warm_up() -> None:
    """Load or compile the kernels so later timings measure enumeration only."""
    enumerate_classes(5)
    enumerate_counts_streaming(5)
