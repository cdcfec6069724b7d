"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import itertools
import random
import time

import pytest
from conftest import ACCEPTANCE_LINES, brute_force_class, every_cycle

from ppolygons.census import census_row, count_all_odd, count_all_prime
from ppolygons.cli import main
from ppolygons.construct import symmetric_representatives
from ppolygons.core import (
    PrimeOrder,
    SymmetryClass,
    VertexCycle,
    axis_count,
    canonical_key,
    cycle_from_steps,
    dihedral_elements,
    is_prime,
    mirror_key,
    steps_of,
    symmetry_class,
    transform,
)
from ppolygons.enumerator import (
    chirality_pairs,
    enumerate_classes,
    enumerate_counts_streaming,
    warm_up,
)
from ppolygons.render import RenderStyle, polygon_svg

# published results table: p -> (total, regular, one_axis, asymmetric)
TABLE = {
    5: (4, 2, 2, 0),
    7: (54, 3, 21, 30),
    11: (164950, 5, 1915, 163030),
    13: (18423144, 6, 23034, 1840010),
}


@pytest.fixture
def criterion(request):
    name = request.node.name.removeprefix("test_")
    state = {"detail": ""}
    yield state
    failed = getattr(request.node, "rep_call_failed", None)
    ACCEPTANCE_LINES.append(f"{'FAIL' if failed else 'PASS'} {name}: {state['detail']}")


@pytest.fixture(scope="module", autouse=True)
def _warm():
    warm_up()


def _fmt(row):
    return "/".join(str(x) for x in row)


def test_ac1_table_by_formula(criterion):
    for p in (5, 7, 11, 13):
        start = time.perf_counter()
        row = census_row(p)
        elapsed = time.perf_counter() - start
        total, regular, one_axis, asym = TABLE[p]
        assert (row.total, row.regular, row.one_axis) == (total, regular, one_axis)
        if p != 13:
            assert row.asymmetric == asym
            assert row.paper_discrepancies == ()
        assert elapsed < 1e-3, f"p={p} took {elapsed * 1e3:.3f} ms"
    row13 = census_row(13)
    assert row13.asymmetric == 18400104
    assert any("1840010" in note and "inconsistent" in note for note in row13.paper_discrepancies)
    assert "1840010" in row13.to_json()
    criterion["detail"] = "Table rows exact; p=13 asymmetric 18400104 with erratum note"


@pytest.mark.parametrize("p, budget", [(5, 0.1), (7, 1.0), (11, 60.0)])
def test_ac2_oracle_equality(criterion, p, budget):
    start = time.perf_counter()
    rep = enumerate_classes(p)
    elapsed = time.perf_counter() - start
    assert rep.row.counts() == census_row(p).counts()
    assert rep.row.counts()[1:5] == TABLE[p]
    assert elapsed < budget, f"{elapsed:.2f}s >= {budget}s"
    streamed = enumerate_counts_streaming(p, workers=1)
    assert streamed.row == rep.row
    criterion["detail"] = f"p={p} {_fmt(rep.row.counts()[1:5])} in {elapsed:.3f}s (< {budget}s)"


@pytest.mark.extended
def test_ac3_p13_streaming(criterion):
    rep = enumerate_counts_streaming(13, workers=1)
    assert (rep.row.total, rep.row.regular, rep.row.one_axis, rep.row.asymmetric) == (
        18423144, 6, 23034, 18400104)
    assert rep.elapsed < 30 * 60
    criterion["detail"] = f"p=13 {_fmt(rep.row.counts()[1:5])} in {rep.elapsed:.1f}s, 1 worker"


def test_ac4_divisor_sum_count(criterion):
    primes = [n for n in range(5, 32) if is_prime(n)]
    for n in primes:
        assert count_all_odd(n) == count_all_prime(n)
    assert count_all_odd(3) == 1
    oracle = len({brute_force_class([0, *rest], 9)
                  for rest in itertools.permutations(range(1, 9))})
    assert oracle == 2246
    assert count_all_odd(9) == oracle
    criterion["detail"] = f"primes {primes[0]}..{primes[-1]} agree; n=3 -> 1; n=9 -> {oracle}"


@pytest.mark.parametrize("p, n", [(5, 4), (7, 24), (11, 1920)])
def test_ac5_constructor(criterion, p, n):
    reps = symmetric_representatives(p)
    keys = [canonical_key(c) for c in reps]
    assert len(reps) == n
    assert len(set(keys)) == n
    for c in reps:
        edges = c.edges()
        assert frozenset(frozenset((-a) % p for a in e) for e in edges) == edges
    assert sum(symmetry_class(c) is SymmetryClass.REGULAR for c in reps) == (p - 1) // 2
    enumerated = {r.key for r in enumerate_classes(p).classes
                  if r.symmetry is not SymmetryClass.ASYMMETRIC}
    assert set(keys) == enumerated
    criterion["detail"] = f"p={p}: {n} distinct symmetric representatives = enumerated set"


def test_ac6_trichotomy(criterion):
    checked = 0
    for p in (5, 7, 11):
        for rec in enumerate_classes(p).classes:
            assert axis_count(cycle_from_steps(rec.key, 0)) in (0, 1, p)
            checked += 1
    rng = random.Random(13)
    order = PrimeOrder(13)
    verts = list(range(13))
    for _ in range(100_000):
        rng.shuffle(verts)
        assert axis_count(VertexCycle(order, tuple(verts))) in (0, 1, 13)
    criterion["detail"] = f"{checked} enumerated classes + 100000 random p=13 cycles"


def test_ac7_chirality(criterion):
    counts = {}
    for p, expected in ((7, 15), (11, 81515)):
        pairs = chirality_pairs(p)
        assert len(pairs) == expected
        assert all(a != b for a, b in pairs)
        members = [k for pair in pairs for k in pair]
        assert len(set(members)) == 2 * expected
        counts[p] = len(pairs)
    criterion["detail"] = f"mirror pairs {counts}, involution fixed-point-free"


def test_ac8_dihedral_properties(criterion):
    total = 0
    for p in (5, 7):
        elements = dihedral_elements(p)
        for cyc in every_cycle(p):
            key, mirror = canonical_key(cyc), mirror_key(cyc)
            for g in elements:
                assert canonical_key(transform(cyc, g)) == (mirror if g.reflection else key)
            assert cycle_from_steps(steps_of(cyc), cyc.vertices[0]) == cyc
            total += 1
    criterion["detail"] = f"{total} cycles x all rotations and reflections"


def _render(tmp_path, capsys, p, kind):
    out = tmp_path / f"{p}_{kind}"
    assert main(["render", "--p", str(p), "--class", kind, "--out", str(out)]) == 0
    capsys.readouterr()
    return {f.name: f.read_bytes() for f in sorted(out.iterdir())}


def test_ac9_render(criterion, tmp_path, capsys):
    expected = {(5, "all"): 4, (7, "symmetric"): 24, (7, "asymmetric"): 30}
    for (p, kind), n in expected.items():
        first = _render(tmp_path / "a", capsys, p, kind)
        second = _render(tmp_path / "b", capsys, p, kind)
        assert first == second
        gallery = first[f"p{p}_{kind}_gallery.svg"].decode()
        assert gallery.count('class="figure"') == n
        assert len(first) == n + 1
    style = RenderStyle(show_axis=True)
    for cyc in symmetric_representatives(7):
        svg = polygon_svg(cyc, style)
        pts_text = svg.split('points="')[1].split('"')[0].split()
        pts = [tuple(float(v) for v in t.split(",")) for t in pts_text]
        segs = {frozenset((pts[i - 1], pts[i])) for i in range(len(pts))}
        flipped = {frozenset((round(style.size - x, 2), y) for x, y in s) for s in segs}
        assert flipped == segs
    criterion["detail"] = "figure counts 4/24/30, byte-identical reruns, mirrored segments match"
