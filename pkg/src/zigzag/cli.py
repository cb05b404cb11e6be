"""Command-line interface.

Exit codes: 0 success (or all rows/instances match), 1 mismatch, 2 usage,
format, validation or flag-cap error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import constructors as C
from .complex import (
    ComplexError,
    FormatError,
    bipyramid,
    dual,
    product,
    pyramid,
    quotient,
    read_hasse,
    validate,
    write_hasse,
)
from .flags import FlagCapExceeded, FlagIndex
from .wythoff import medial

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# -- io helpers ---------------------------------------------------------------------


def _read_complex(path: str):
    if path == "-":
        return read_hasse(sys.stdin)
    return read_hasse(path)


def _write_complex(K, path: str | None) -> None:
    if path in (None, "-"):
        write_hasse(K, sys.stdout)
    else:
        write_hasse(K, path)


def _read_map(path: str):
    from .maps import from_complex2, read_fs

    if path.endswith(".fs"):
        return read_fs(path)
    return from_complex2(_read_complex(path))


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> tuple:
    """``"1|2,3"`` -> ((1,), (2, 3))."""
    return tuple(tuple(_ints(part)) for part in text.replace(";", "|").split("|") if part.strip())


# -- commands -----------------------------------------------------------------------


def cmd_generate(args) -> int:
    part = _partition(args.partition) if args.partition else ()
    K = C.build(args.family, d=args.d, m=args.m, partition=part)
    _write_complex(K, args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    from .symmetry import automorphisms, is_z_uniform
    from .zigzags import ZigzagDecomposition, is_z_knotted, zigzag_graph_connected

    K = _read_complex(args.input)
    reports = [r.strip() for r in args.report.split(",") if r.strip()]
    unknown = set(reports) - {"validate", "z", "int", "orbits", "group"}
    if unknown:
        raise UsageError(f"unknown report(s): {', '.join(sorted(unknown))}")
    rep = validate(K)
    if not rep.ok:
        print(f"invalid complex: {rep.summary()}", file=sys.stderr)
        return EXIT_ERROR
    out = []
    if "validate" in reports:
        out.append(f"validate: {rep.summary()}")
    fi = FlagIndex(K)
    D = None
    if reports and set(reports) & {"z", "int", "orbits"}:
        D = ZigzagDecomposition(K, fi)
        if "int" in reports:
            out.append(D.report(args.format).rstrip("\n"))
        elif "z" in reports:
            out.append(D.z_vector_string() if args.format == "text" else f"z,{D.z_vector_string()}")
        if args.format == "text" and ("z" in reports or "int" in reports):
            out.append(
                f"zigzags: {len(D)}  self-reverse orbits: {D.self_reverse_count}  "
                f"Z connected: {zigzag_graph_connected(D)}  z-knotted: {is_z_knotted(D)}"
            )
    if "group" in reports or "orbits" in reports:
        G = automorphisms(K, fi)
        if "group" in reports:
            out.append(f"|Aut| = {G.order}  flag orbits: {G.n_flag_orbits}  flags: {fi.n_flags}")
        if "orbits" in reports:
            sizes = G.zigzag_orbit_sizes(D)
            out.append(
                f"zigzag orbits: {len(sizes)} sizes {sizes}  z-transitive: {len(sizes) <= 1}  "
                f"z-uniform (proxy): {is_z_uniform(D)}"
            )
    print("\n".join(out))
    return EXIT_OK


def cmd_wythoff(args) -> int:
    from .wythoff import wythoff

    K = _read_complex(args.input)
    _write_complex(wythoff(K, _ints(args.V)), args.output)
    return EXIT_OK


def _unary(fn):
    def run(args) -> int:
        _write_complex(fn(_read_complex(args.input)), args.output)
        return EXIT_OK

    return run


def cmd_product(args) -> int:
    _write_complex(product(_read_complex(args.left), _read_complex(args.right)), args.output)
    return EXIT_OK


def cmd_fold(args) -> int:
    from .symmetry import automorphisms, central_involutions

    K = _read_complex(args.input)
    invs = central_involutions(automorphisms(K))
    if not invs:
        print("no central fixed-point-free involution", file=sys.stderr)
        return EXIT_ERROR
    if not 0 <= args.which < len(invs):
        raise UsageError(f"--which must be in 0..{len(invs) - 1}")
    _write_complex(quotient(K, invs[args.which]), args.output)
    return EXIT_OK


def cmd_cut600(args) -> int:
    if args.count:
        from .symmetry import automorphisms, count_special_cut_orbits

        if args.k is None or args.k < 1:
            raise UsageError("--count needs --k >= 1")
        if args.k >= 6 and not args.deep:
            raise UsageError("k >= 6 is long-running; pass --deep")
        vperms = automorphisms(C.cell600()).vertex_permutations()
        print(f"k={args.k}: {count_special_cut_orbits(args.k, vperms, C.cell600_skeleton())} orbits")
        return EXIT_OK
    if args.enumerate:
        from .symmetry import enumerate_special_cut_classes

        if args.k is None:
            raise UsageError("--enumerate needs --k")
        if args.k >= 3 and not args.deep:
            raise UsageError("k >= 3 is long-running; pass --deep")
        count, reps = enumerate_special_cut_classes(args.k, max_k=3)
        print(f"k={args.k}: {count} classes")
        for r in reps:
            print(" ".join(str(int(v)) for v in r))
        return EXIT_OK
    if args.hurwitz:
        verts = list(C.HURWITZ_UNITS)
    elif args.vertices:
        verts = _ints(args.vertices)
    else:
        raise UsageError("give --vertices, --hurwitz, or --k with --enumerate")
    _write_complex(C.special_cut(C.cell600(), verts), args.output)
    return EXIT_OK


def cmd_maps(args) -> int:
    from .maps import census, lins, skeleton_bipartition, twist, write_fs

    fs = _read_map(args.input)
    if args.op:
        fs = lins(args.op, fs)
    if args.twist is not None:
        fs = twist(fs, _ints(args.twist))
    if args.output:
        write_fs(fs, sys.stdout if args.output == "-" else args.output)
    if args.census or not args.output:
        from .zigzags import format_z_vector

        c = census(fs)
        surface = f"genus {c.genus}" if c.orientable else f"crosscaps {c.crosscaps}"
        print(f"v = {format_z_vector({(k, 0, 0): m for k, m in c.v.items()})}")
        print(f"p = {format_z_vector({(k, 0, 0): m for k, m in c.p.items()})}")
        print(f"z = {format_z_vector({(k, 0, 0): m for k, m in c.z.items()})}")
        print(f"V={c.vertices} E={c.edges} F={c.faces} chi={c.chi} "
              f"{'orientable' if c.orientable else 'non-orientable'} {surface}")
        bip = skeleton_bipartition(fs)
        if bip is not None:
            parts = sorted((sorted(p) for p in bip), key=lambda p: (len(p), p))
            print("bipartition: " + " | ".join(",".join(map(str, p)) for p in parts))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .conjectures import SUITES, verify_suite

    suites = SUITES if args.conjecture == "all" else (args.conjecture,)
    if args.conjecture != "all" and args.conjecture not in SUITES:
        raise UsageError(f"unknown conjecture {args.conjecture!r}; choose from all, {', '.join(SUITES)}")
    code = EXIT_OK
    for s in suites:
        run = verify_suite(s, args.max, workers=args.workers)
        for v in run.verdicts:
            if args.verbose or v.status != "match":
                print(v.line())
        print(run.summary())
        if not run.ok:
            code = EXIT_MISMATCH
    return code


def cmd_tables(args) -> int:
    from .tables import TABLE1_EXCLUDED, run_table

    subset = [s for s in (args.subset or "").split(",") if s.strip()]
    results = run_table(args.table, subset or None, deep=args.deep, workers=args.workers)
    if not results:
        raise UsageError("no rows selected")
    for r in results:
        print(r.line())
    if args.table == 1 and not subset:
        for name, why in TABLE1_EXCLUDED.items():
            print(f"skip {name:<40} ({why})")
    ok = sum(r.ok for r in results)
    print(f"table {args.table}: {ok}/{len(results)} rows match")
    return EXIT_OK if ok == len(results) else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .conjectures import SUITES
    from .maps import LINS_OPS

    p = argparse.ArgumentParser(prog="zigzag", description="Zigzag structure of complexes and maps.")
    p.add_argument("--flag-cap", type=int, help="maximum number of flags (also ZIGZAG_FLAG_CAP)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a named complex")
    g.add_argument("--family", required=True, choices=sorted(C.FAMILIES + C.EXTRA_FAMILIES))
    g.add_argument("--d", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--partition", help="type34 parts, e.g. '1|2,3'")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="validate and report zigzags, orbits, group")
    a.add_argument("-i", "--input", required=True)
    a.add_argument("--report", default="validate,z,int")
    a.add_argument("--format", choices=("text", "csv"), default="text")
    a.set_defaults(func=cmd_analyze)

    w = sub.add_parser("wythoff", help="Wythoff construction K(V)")
    w.add_argument("-i", "--input", required=True)
    w.add_argument("--V", required=True, help="ringed subset, e.g. 0,1,3")
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_wythoff)

    for name, fn, hlp in (
        ("dual", dual, "dual complex"),
        ("medial", medial, "K({1})"),
        ("pyr", pyramid, "pyramid"),
        ("bpyr", bipyramid, "bipyramid"),
    ):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("-i", "--input", required=True)
        s.add_argument("-o", "--output")
        s.set_defaults(func=_unary(fn))

    pr = sub.add_parser("product", help="direct product of two complexes")
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("-o", "--output")
    pr.set_defaults(func=cmd_product)

    f = sub.add_parser("fold", help="quotient by a central fixed-point-free involution")
    f.add_argument("-i", "--input", required=True)
    f.add_argument("--which", type=int, default=0)
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fold)

    c = sub.add_parser("cut600", help="special cuts of the 600-cell")
    c.add_argument("--vertices", help="independent vertex ids")
    c.add_argument("--hurwitz", action="store_true", help="cut at the 24 Hurwitz units (snub 24-cell)")
    c.add_argument("--k", type=int)
    c.add_argument("--enumerate", action="store_true", help="isomorphism classes with representatives (k <= 3)")
    c.add_argument("--count", action="store_true", help="count orbits of independent k-sets (Burnside)")
    c.add_argument("--deep", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_cut600)

    m = sub.add_parser("maps", help="Lins operations, twisting and census of maps")
    m.add_argument("-i", "--input", required=True, help=".fs flag system or 2-dimensional .hasse")
    m.add_argument("--op", choices=LINS_OPS)
    m.add_argument("--twist", help="vertex ids to twist (after --op)")
    m.add_argument("--census", action="store_true")
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_maps)

    v = sub.add_parser("verify", help="conjecture suites")
    v.add_argument("--conjecture", required=True, help=f"all or one of: {', '.join(SUITES)}")
    v.add_argument("--max", type=int, help="parameter bound (suite default if omitted)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="reproduce a reference table")
    t.add_argument("--table", type=int, required=True, choices=(1, 2, 3, 5))
    t.add_argument("--subset", help="comma-separated name fragments")
    t.add_argument("--deep", action="store_true")
    t.add_argument("--workers", type=int, default=1)
    t.set_defaults(func=cmd_tables)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.flag_cap is not None:
        os.environ["ZIGZAG_FLAG_CAP"] = str(args.flag_cap)
    try:
        return args.func(args)
    except (UsageError, FormatError, ComplexError, FlagCapExceeded, ValueError, OSError) as exc:
        print(f"zigzag: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
