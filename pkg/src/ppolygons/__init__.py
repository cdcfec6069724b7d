"""Enumeration and symmetry census of p-polygons for prime p."""

from .census import CensusRow, census_row, count_all_odd, count_all_prime, totient
from .construct import ConstructionPlan, all_plans, build, regular_representatives
from .construct import symmetric_representatives
from .core import (
    DihedralElement,
    PrimeOrder,
    StepSequence,
    SymmetryClass,
    VertexCycle,
    axis_count,
    canonical_key,
    cycle_from_steps,
    make_cycle,
    mirror_key,
    steps_of,
    symmetry_class,
    transform,
)

__version__ = "0.1.0"
