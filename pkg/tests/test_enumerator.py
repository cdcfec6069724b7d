import numpy as np
import pytest
from conftest import every_cycle

from ppolygons import _kernels
from ppolygons.census import census_row
from ppolygons.construct import symmetric_representatives
from ppolygons.core import (
    SymmetryClass,
    axis_count,
    canonical_key,
    cycle_from_steps,
    mirror_key,
    steps_of,
    symmetry_class,
)
from ppolygons.enumerator import (
    InfeasibleSize,
    chirality_pairs,
    enumerate_classes,
    enumerate_counts_streaming,
    export_classes,
    parse_class_line,
)


@pytest.fixture(scope="module")
def report11():
    return enumerate_classes(11)


@pytest.mark.parametrize("p, split", [(5, (2, 2, 0)), (7, (3, 21, 30))])
def test_collect_small(p, split):
    rep = enumerate_classes(p)
    assert rep.mode == "collect"
    assert rep.row.source == "enumeration"
    assert (rep.row.regular, rep.row.one_axis, rep.row.asymmetric) == split
    assert rep.row.counts() == census_row(p).counts()
    tags = [r.symmetry for r in rep.classes]
    assert (tags.count(SymmetryClass.REGULAR), tags.count(SymmetryClass.ONE_AXIS),
            tags.count(SymmetryClass.ASYMMETRIC)) == split


def test_collect_11(report11):
    assert report11.row.counts() == (11, 164950, 5, 1915, 163030, 1920)
    assert len(report11.classes) == 164950


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("workers", [1, 3])
def test_mode_equivalence(p, workers):
    collected = enumerate_classes(p).row
    streamed = enumerate_counts_streaming(p, workers)
    assert streamed.mode == "stream"
    assert streamed.row == collected


@pytest.mark.parametrize("p", [5, 7, 11])
def test_pruning_changes_nothing(p):
    pruned = enumerate_counts_streaming(p, prune=True).row
    assert enumerate_counts_streaming(p, prune=False).row == pruned
    assert enumerate_counts_streaming(p, prune=True, prefix_length=3).row == pruned
    assert enumerate_counts_streaming(p, prune=True, prefix_length=0).row == pruned


def test_start_vertex_sufficiency():
    fixed = {canonical_key(c) for c in every_cycle(5, fixed_start=True)}
    free = {canonical_key(c) for c in every_cycle(5)}
    assert fixed == free


@pytest.mark.parametrize("p", [5, 7])
def test_classes_match_pure_python(p):
    rep = enumerate_classes(p)
    expected = sorted({canonical_key(c) for c in every_cycle(p, fixed_start=True)},
                      key=lambda k: k.steps)
    assert [r.key for r in rep.classes] == expected
    for rec in rep.classes:
        cyc = cycle_from_steps(rec.key, 0)
        assert rec.symmetry is symmetry_class(cyc)
        assert rec.mirror == mirror_key(cyc)
        assert rec.axis_count == axis_count(cyc)


def test_kernel_canonical_code_matches_core():
    for cyc in every_cycle(7, fixed_start=True):
        s = np.array(steps_of(cyc).steps, dtype=np.int64)
        code = _kernels.canonical_code(s, 7)
        assert tuple(_kernels.decode(code, 7)) == canonical_key(cyc).steps


def test_deterministic_sorted_order(report11):
    keys = [r.key.steps for r in report11.classes]
    assert keys == sorted(keys)
    again = enumerate_classes(7).classes
    assert again == enumerate_classes(7).classes


def test_trichotomy_witness(report11):
    for p, rep in ((5, enumerate_classes(5)), (7, enumerate_classes(7)), (11, report11)):
        expected = {SymmetryClass.ASYMMETRIC: 0, SymmetryClass.ONE_AXIS: 1,
                    SymmetryClass.REGULAR: p}
        for rec in rep.classes:
            assert rec.axis_count == expected[rec.symmetry]


def test_mirror_is_an_involution(report11):
    by_key = {r.key: r for r in report11.classes}
    for rec in report11.classes:
        assert by_key[rec.mirror].mirror == rec.key
        assert (rec.mirror != rec.key) == (rec.symmetry is SymmetryClass.ASYMMETRIC)


def test_symmetric_classes_equal_construction(report11):
    for p, rep in ((5, enumerate_classes(5)), (7, enumerate_classes(7)), (11, report11)):
        sym = {r.key for r in rep.classes if r.symmetry is not SymmetryClass.ASYMMETRIC}
        assert sym == {canonical_key(c) for c in symmetric_representatives(p)}


def test_chirality_pairs():
    assert chirality_pairs(5) == []
    pairs = chirality_pairs(7)
    assert len(pairs) == 15
    flat = [k for pair in pairs for k in pair]
    assert len(set(flat)) == 30


def test_chirality_pairs_11():
    assert len(chirality_pairs(11)) == 81515


def test_export_format():
    rep = enumerate_classes(7)
    text = export_classes(rep.classes)
    lines = text.splitlines()
    assert len(lines) == 54
    assert lines[0] == "[1,1,1,1,1,1,1] # symmetry=regular"
    for line, rec in zip(lines, rep.classes):
        key, tag = parse_class_line(line)
        assert key == rec.key and tag == rec.symmetry.value


def test_report_json_fields():
    d = enumerate_counts_streaming(7, 2).to_dict()
    assert d["mode"] == "stream" and d["workers"] == 2
    assert isinstance(d["elapsed_ms"], int)
    assert d["source"] == "enumeration"


def test_infeasible():
    with pytest.raises(InfeasibleSize):
        enumerate_counts_streaming(17)
    with pytest.raises(InfeasibleSize):
        enumerate_classes(17)


@pytest.mark.extended
def test_p13_streaming():
    rep = enumerate_counts_streaming(13)
    assert rep.row.counts() == (13, 18423144, 6, 23034, 18400104, 23040)
    assert rep.row.paper_discrepancies
