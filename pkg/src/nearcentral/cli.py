"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 refused by a resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .characters import closed_form_values, genchar_oracle, genchar_strahov
from .combinatorics import Partition, TaggedClass, rational_to_str, tagged, tagged_classes
from .decompositions import (
    FactorizationQuery,
    brute_decomposition_table,
    decomposition_count,
    decomposition_table,
)
from .dipoles import (
    brute_force_p_q_dipoles,
    formula_face_counts,
    genus_counts,
    genus_counts_from_faces,
    symmetry_check,
)
from .z1 import ResourceGuardError, brute_structure_constant, connection_coefficient

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _shape(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x]
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _cls(shape: Partition, tag: int, n: int | None = None) -> TaggedClass:
    try:
        c = tagged(shape, tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n is not None and c.n != n:
        raise UsageError(f"class {c} is not a class of S_{n}")
    return c


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (Fraction, int)):
        return rational_to_str(x)
    if isinstance(x, Partition):
        return ",".join(map(str, x))
    return str(x)


def _jsonable(x):
    if isinstance(x, Partition):
        return list(x)
    if isinstance(x, Fraction):
        return rational_to_str(x) if x.denominator != 1 else int(x)
    return x


class Table:
    def __init__(self, columns: list[str]):
        self.columns = columns
        self.rows: list[list] = []

    def add(self, *values) -> None:
        assert len(values) == len(self.columns)
        self.rows.append(list(values))

    def render(self, fmt: str) -> str:
        if fmt == "json":
            records = [{c: _jsonable(v) for c, v in zip(self.columns, r)} for r in self.rows]
            return json.dumps(records, indent=2) + "\n"
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for r in self.rows:
            writer.writerow([_fmt(v) for v in r])
        return buf.getvalue()


# --- commands ------------------------------------------------------------------


def _p_values(args, lo: int) -> list[int]:
    n = args.n
    if args.p is not None:
        if not 1 <= args.p <= n - 1:
            raise UsageError(f"p must satisfy 1 <= p <= n-1 (n={n}, p={args.p})")
        return [args.p]
    return list(range(lo, n))


def cmd_genus_table(args) -> tuple[Table, bool]:
    n = args.n
    if n < 2:
        raise UsageError("genus-table needs n >= 2")
    table = Table(["n", "p", "g", "count"])
    ok = True
    for p in _p_values(args, 1):
        if n >= 4 and p >= 2:
            counts = genus_counts(n, p)
        else:
            counts = genus_counts_from_faces(n, p)
        if args.brute:
            bf = brute_force_p_q_dipoles(n, p, max_n=args.max_brute_n, jobs=args.jobs)
            ok &= bf.genus == counts
        for g, v in counts.items():
            table.add(n, p, g, v)
    return table, ok


def cmd_face_table(args) -> tuple[Table, bool]:
    n = args.n
    if n < 2:
        raise UsageError("face-table needs n >= 2")
    q = n - 1 if args.q is None else args.q
    if not 1 <= q <= n - 1:
        raise UsageError(f"q must satisfy 1 <= q <= n-1 (n={n}, q={q})")
    table = Table(["n", "p", "q", "shape", "tag", "count"])
    ok = True
    order = {c: k for k, c in enumerate(tagged_classes(n))}
    for p in _p_values(args, 1):
        if q == n - 1:
            counts = formula_face_counts(n, p)
            if args.brute:
                bf = brute_force_p_q_dipoles(n, p, max_n=args.max_brute_n, jobs=args.jobs)
                ok &= bf.faces == counts
        else:
            # no closed form away from q = n-1
            counts = brute_force_p_q_dipoles(n, p, q, max_n=args.max_brute_n).faces
        for c in sorted(counts, key=order.__getitem__):
            table.add(n, p, q, c.shape, c.tag, counts[c])
    return table, ok


def cmd_genchar(args) -> tuple[Table, bool]:
    rho = _cls(args.rho, args.ell, args.n)
    cls = _cls(args.mu, args.j, rho.n)
    values = {"strahov": genchar_strahov(rho, cls)}
    if rho.n <= args.max_brute_n:
        values["oracle"] = genchar_oracle(rho, cls)
    values.update(closed_form_values(rho, cls))
    table = Table(["method", "value"])
    for method, v in values.items():
        table.add(method, v)
    return table, len(set(values.values())) == 1


def cmd_connection(args) -> tuple[Table, bool]:
    a = _cls(args.lam, args.i, args.n)
    b = _cls(args.mu, args.j, a.n)
    c = _cls(args.nu, args.k, a.n)
    table = Table(["method", "value"])
    value = connection_coefficient(a, b, c)
    table.add("characters", value)
    ok = True
    if args.brute:
        if a.n > args.max_brute_n:
            raise ResourceGuardError(f"brute-force structure constants refused for n={a.n}")
        bf = brute_structure_constant(a, b, c)
        table.add("brute-force", bf)
        ok = bf == value
    return table, ok


def cmd_decompose(args) -> tuple[Table, bool]:
    n = args.n
    table = Table(["n", "left_shape", "left_tag", "right_shape", "right_tag", "count"])
    if args.lam is None and args.mu is None:
        if n is None:
            raise UsageError("decompose needs --n or both classes")
        counts = decomposition_table(n)
    else:
        if args.lam is None or args.mu is None or args.i is None or args.j is None:
            raise UsageError("decompose needs --lam/--i and --mu/--j together")
        q = FactorizationQuery(_cls(args.lam, args.i, n), _cls(args.mu, args.j, n))
        if q.left.n != q.right.n:
            raise UsageError("classes of different degree")
        n = q.n
        counts = {(q.left, q.right): int(decomposition_count(q))}
    ok = True
    if args.brute:
        bf = brute_decomposition_table(n, max_n=args.max_brute_n)
        ok = all(bf[key] == v for key, v in counts.items())
    for (a, b), v in counts.items():
        table.add(n, a.shape, a.tag, b.shape, b.tag, v)
    return table, ok


def cmd_symmetry(args) -> tuple[Table, bool]:
    if args.n_max < 4:
        raise UsageError("symmetry needs --n-max >= 4")
    table = Table(["n", "p", "p_mirror", "equal"])
    ok = True
    for n in range(4, args.n_max + 1):
        for p, eq in symmetry_check(n).items():
            table.add(n, p, n + 1 - p, eq)
            ok &= eq
    return table, ok


def cmd_verify(args) -> tuple[Table, bool]:
    from . import verify

    suites = verify.SUITES if args.suite == "all" else [args.suite]
    table = Table(["suite", "n", "checked", "mismatches"])
    ok = True
    for name in suites:
        for n, checked, bad in verify.run_suite(name, args.n_max, max_brute_n=args.max_brute_n, jobs=args.jobs):
            table.add(name, n, checked, bad)
            ok &= bad == 0
    return table, ok


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from . import verify

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--max-brute-n", type=int, default=8, help="largest n for exhaustive scans")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for brute-force scans")

    parser = argparse.ArgumentParser(prog="nearcentral", description="Near-central enumeration in S_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus-table", parents=[common], help="dipole counts by genus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--brute", action="store_true", help="also check against exhaustive enumeration")
    p.set_defaults(func=cmd_genus_table)

    p = sub.add_parser("face-table", parents=[common], help="dipole counts by face class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int, help="non-root jump (default n-1)")
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_face_table)

    p = sub.add_parser("genchar", parents=[common], help="one generalized character, every method")
    p.add_argument("--rho", type=_shape, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--mu", type=_shape, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_genchar)

    p = sub.add_parser("connection", parents=[common], help="[K_nu,k] K_lam,i K_mu,j")
    for flag in ("lam", "mu", "nu"):
        p.add_argument(f"--{flag}", type=_shape, required=True)
    for flag in ("i", "j", "k"):
        p.add_argument(f"--{flag}", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_connection)

    p = sub.add_parser("decompose", parents=[common], help="factorizations of a full cycle")
    p.add_argument("--lam", type=_shape)
    p.add_argument("--i", type=int)
    p.add_argument("--mu", type=_shape)
    p.add_argument("--j", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("symmetry", parents=[common], help="check D_{n,p} = D_{n,n+1-p}")
    p.add_argument("--n-max", type=int, default=40)
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("verify", parents=[common], help="formula/oracle agreement suites")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.max_brute_n < 1 or args.jobs < 1:
        print("error: --max-brute-n and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        table, ok = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ArithmeticError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = table.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not ok:
        print("verification mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
