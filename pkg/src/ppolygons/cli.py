"""Command-line interface: census tables, class listings, figures, checks.

Exit codes: 0 success, 2 invalid arguments, 3 mismatch or failed check,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import census, construct, enumerator, render
from .core import (
    PolygonError,
    PrimeOrder,
    SymmetryClass,
    axis_count,
    canonical_key,
    cycle_from_steps,
    is_prime,
    symmetry_class,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_IO = 0, 2, 3, 4

CLASS_FILTERS = ("all", "regular", "one-axis", "asymmetric", "symmetric")
MAX_CONSTRUCT = 13


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _primes(args) -> list[PrimeOrder]:
    if args.p is not None:
        if not is_prime(args.p) or args.p < 5:
            raise UsageError("p must be prime >= 5")
        candidates = [args.p]
    else:
        lo, hi = args.range
        candidates = [q for q in range(max(lo, 5), hi + 1) if is_prime(q)]
        if not candidates:
            raise UsageError(f"no prime >= 5 in {lo}..{hi}")
    try:
        return [PrimeOrder(q) for q in candidates]
    except PolygonError as exc:
        raise UsageError(str(exc)) from None


def _check_enumerable(p: int, extended: bool) -> None:
    if p > enumerator.MAX_STREAM:
        raise UsageError(f"enumeration is limited to p <= {enumerator.MAX_STREAM}, got {p}")
    if p == enumerator.MAX_STREAM and not extended:
        raise UsageError(f"p={p} enumeration requires --extended")


# -- census -------------------------------------------------------------------

_TABLE_COLS = census.CSV_COLUMNS + ("source",)


def _table(rows: list[dict], extra: str | None = None) -> str:
    cols = list(_TABLE_COLS) + ([extra] if extra else [])
    widths = [max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in cols]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).rjust(w) for c, w in zip(cols, widths)))
    return "\n".join(lines)


def cmd_census(args) -> int:
    orders = _primes(args)
    if args.method == "enumerate":
        for o in orders:
            _check_enumerable(o.p, args.extended)
    elif args.method == "both" and any(o.p > enumerator.MAX_STREAM for o in orders):
        raise UsageError(f"enumeration is limited to p <= {enumerator.MAX_STREAM}")

    rows: list[dict] = []
    notes: list[str] = []
    status = EXIT_OK
    for o in orders:
        formula = census.census_row(o)
        if args.method in ("formula", "both"):
            rows.append(formula.to_dict())
        if args.method == "formula":
            notes.extend(formula.paper_discrepancies)
            continue
        if o.p == enumerator.MAX_STREAM and not args.extended:
            rows[-1]["verdict"] = "SKIPPED"
            notes.append(f"p={o.p}: enumeration side skipped, requires --extended")
            notes.extend(formula.paper_discrepancies)
            continue
        report = enumerator.enumerate_counts_streaming(o, args.workers)
        row = report.to_dict()
        notes.extend(report.row.paper_discrepancies)
        if args.method == "both":
            verdict = "MATCH" if report.row.counts() == formula.counts() else "MISMATCH"
            row["verdict"] = verdict
            rows[-1]["verdict"] = verdict
            if verdict == "MISMATCH":
                status = EXIT_MISMATCH
        rows.append(row)

    notes = list(dict.fromkeys(notes))
    if args.format == "json":
        print(json.dumps({"rows": rows, "notes": notes}, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        cols = list(_TABLE_COLS) + (["verdict"] if args.method == "both" else [])
        writer = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        for n in notes:
            print(f"# note: {n}")
    else:
        print(_table(rows, "verdict" if args.method == "both" else None))
        for n in notes:
            print(f"note: {n}")
    return status


# -- list / render ------------------------------------------------------------

def _records(p: PrimeOrder, kind: str) -> list[enumerator.ClassRecord]:
    """Class records for a filter, in canonical-key order."""
    if kind in ("all", "asymmetric"):
        if p.p > enumerator.MAX_COLLECT:
            raise UsageError(f"--class {kind} needs p <= {enumerator.MAX_COLLECT}")
        recs = enumerator.enumerate_classes(p).classes
        if kind == "asymmetric":
            recs = [r for r in recs if r.symmetry is SymmetryClass.ASYMMETRIC]
        return recs
    if kind == "regular":
        cycles = construct.regular_representatives(p)
    else:
        if p.p > MAX_CONSTRUCT:
            raise UsageError(f"--class {kind} needs p <= {MAX_CONSTRUCT}")
        cycles = construct.symmetric_representatives(p)
    recs = []
    for c in cycles:
        sym = symmetry_class(c)
        if kind == "one-axis" and sym is not SymmetryClass.ONE_AXIS:
            continue
        key = canonical_key(c)
        recs.append(enumerator.ClassRecord(key, sym, key, axis_count(c)))
    return sorted(recs, key=lambda r: r.key.steps)


def cmd_list(args) -> int:
    (p,) = _primes(args)
    for rec in _records(p, args.kind):
        print(rec.line())
    return EXIT_OK


def _figures(p: PrimeOrder, kind: str):
    """Cycles to draw, in display order."""
    if kind in ("symmetric", "one-axis"):
        if p.p > MAX_CONSTRUCT:
            raise UsageError(f"--class {kind} needs p <= {MAX_CONSTRUCT}")
        cycles = construct.symmetric_representatives(p)
        if kind == "one-axis":
            cycles = [c for c in cycles if symmetry_class(c) is SymmetryClass.ONE_AXIS]
        return cycles
    if kind == "regular":
        return construct.regular_representatives(p)
    recs = _records(p, kind)
    rank = {SymmetryClass.REGULAR: 0, SymmetryClass.ONE_AXIS: 1, SymmetryClass.ASYMMETRIC: 2}
    recs = sorted(recs, key=lambda r: (rank[r.symmetry], r.key.steps))
    return [cycle_from_steps(r.key, 0) for r in recs]


def cmd_render(args) -> int:
    (p,) = _primes(args)
    style = render.RenderStyle(size=args.size, show_labels=args.labels, show_axis=not args.no_axis)
    cycles = _figures(p, args.kind)
    out = Path(args.out)
    written = []
    try:
        out.mkdir(parents=True, exist_ok=True)
        ordered = [c for c, _ in render.pair_mirrors(cycles)]
        seen: dict[str, int] = {}
        if not args.gallery_only:
            for cyc in ordered:
                tag = symmetry_class(cyc).value
                seen[tag] = seen.get(tag, 0) + 1
                path = out / render.figure_filename(p.p, tag, seen[tag])
                path.write_text(render.polygon_svg(cyc, style))
                written.append(path)
        path = out / f"p{p.p}_{args.kind}_gallery.svg"
        path.write_text(render.gallery(cycles, style, args.columns))
        written.append(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for path in written:
        print(path)
    print(f"# {len(cycles)} figures", file=sys.stderr)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def run_checks(p: PrimeOrder, workers: int = 1) -> list[tuple[str, bool, str]]:
    """Cross-check formulas, construction and enumeration; (name, ok, detail)."""
    results = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        results.append((name, bool(ok), detail))

    formula = census.census_row(p)
    check("formula-row", True, f"{formula.counts()[1:]}")
    check("divisor-sum", census.count_all_odd(p.p) == formula.total,
          f"count_all_odd={census.count_all_odd(p.p)}")

    stream = enumerator.enumerate_counts_streaming(p, workers)
    check("enumeration=formula", stream.row.counts() == formula.counts(),
          f"{stream.row.counts()[1:]} in {stream.elapsed:.2f}s, {workers} worker(s)")

    reps = construct.symmetric_representatives(p)
    keys = [canonical_key(c) for c in reps]
    check("construction-count", len(reps) == formula.at_least_one_axis, f"{len(reps)} cycles")
    check("construction-distinct", len(set(keys)) == len(keys), f"{len(set(keys))} distinct keys")
    n = p.p
    fixed = all(
        frozenset(frozenset((-a) % n for a in e) for e in c.edges()) == c.edges() for c in reps
    )
    check("construction-axis", fixed, "every edge set fixed by j -> -j")
    n_regular = sum(symmetry_class(c) is SymmetryClass.REGULAR for c in reps)
    check("construction-regular", n_regular == formula.regular, f"{n_regular} regular")

    check("asymmetric-parity", stream.row.asymmetric % 2 == 0, f"{stream.row.asymmetric}")
    if p.p <= enumerator.MAX_COLLECT:
        coll = enumerator.enumerate_classes(p)
        check("collect=stream", coll.row.counts() == stream.row.counts(),
              f"{len(coll.classes)} classes")
        sym_keys = {r.key for r in coll.classes if r.symmetry is not SymmetryClass.ASYMMETRIC}
        check("construction-complete", sym_keys == set(keys), f"{len(sym_keys)} symmetric classes")
        expected_axes = {SymmetryClass.ASYMMETRIC: 0, SymmetryClass.ONE_AXIS: 1,
                         SymmetryClass.REGULAR: n}
        tri = all(r.axis_count == expected_axes[r.symmetry] for r in coll.classes)
        check("trichotomy", tri, "axis counts in {0, 1, p} and agree with classes")
        by_key = {r.key: r for r in coll.classes}
        involution = all(
            r.mirror != r.key and by_key[r.mirror].mirror == r.key
            for r in coll.classes if r.symmetry is SymmetryClass.ASYMMETRIC
        )
        check("chirality", involution,
              f"{stream.row.asymmetric // 2} mirror pairs, no fixed points")
    else:
        check("construction-complete", len(set(keys)) == stream.row.at_least_one_axis,
              "distinct constructed keys = enumerated symmetric classes")
    return results


def cmd_verify(args) -> int:
    (p,) = _primes(args)
    _check_enumerable(p.p, args.extended)
    results = run_checks(p, args.workers)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    formula = census.census_row(p)
    for note in formula.paper_discrepancies:
        print(f"note: {note}")
    passed = all(ok for _, ok, _ in results)
    print(f"{'all checks passed' if passed else 'verification FAILED'}: "
          f"{formula.total} classes at p={p.p}")
    return EXIT_OK if passed else EXIT_MISMATCH


# -- count-all ----------------------------------------------------------------

def cmd_count_all(args) -> int:
    n = args.n
    if n % 2 == 0:
        raise UsageError("n must be odd")
    if n < 3:
        raise UsageError("n must be >= 3")
    value = census.count_all_odd(n)
    print(value)
    if n >= 5 and is_prime(n) and n <= 31:
        simple = census.count_all_prime(n)
        print(f"prime form: {simple} ({'equal' if simple == value else 'DIFFERENT'})")
        if simple != value:
            return EXIT_MISMATCH
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_p(sp, allow_range: bool = False) -> None:
    if allow_range:
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--p", type=int)
        g.add_argument("--range", type=_parse_range, metavar="LO..HI")
    else:
        sp.add_argument("--p", type=int, required=True)
        sp.set_defaults(range=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ppolygons", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    workers = dict(type=int, default=enumerator.default_workers(),
                   help="worker processes (default: $PPOLYGONS_WORKERS or 1)")

    sp = sub.add_parser("census", help="class counts per prime")
    _add_p(sp, allow_range=True)
    sp.add_argument("--method", choices=("formula", "enumerate", "both"), default="formula")
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sp.add_argument("--workers", **workers)
    sp.add_argument("--extended", action="store_true", help="allow p=13 enumeration")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("list", help="one line per class")
    _add_p(sp)
    sp.add_argument("--class", dest="kind", choices=CLASS_FILTERS, default="all")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("render", help="write SVG figures")
    _add_p(sp)
    sp.add_argument("--class", dest="kind", choices=CLASS_FILTERS, default="all")
    sp.add_argument("--out", default=".")
    sp.add_argument("--columns", type=int, default=4)
    sp.add_argument("--size", type=int, default=200)
    sp.add_argument("--labels", action="store_true")
    sp.add_argument("--no-axis", action="store_true")
    sp.add_argument("--gallery-only", action="store_true")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="cross-check formulas, construction, enumeration")
    _add_p(sp)
    sp.add_argument("--workers", **workers)
    sp.add_argument("--extended", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("count-all", help="rotation classes of n-polygons, odd n")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_count_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
