"""
Command-line front end.

Data subcommands print JSON; `verify` prints a table unless --json is given.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cache, center, gamma, schur_graph, sergeev, verify, waction
from .partitions import (
    OddPartition,
    StrictPartition,
    canonical_sorted,
    enumerate_odd,
    enumerate_partitions,
    enumerate_strict,
    pad_ones,
    sorted_parts,
)
from .serialization import coeff_map, rational


class UsageError(Exception):
    pass


def _parts(text: str) -> tuple[int, ...]:
    """"3,1" -> (3, 1); "" and "0" give the empty partition."""
    text = text.strip().strip("[]()")
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"parts must be positive: {text!r}")
    return parts


def _strict(parts) -> StrictPartition:
    try:
        return StrictPartition(sorted_parts(parts))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _odd(parts) -> OddPartition:
    try:
        return OddPartition(sorted_parts(parts))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(data) -> None:
    print(json.dumps(data, ensure_ascii=False))


# Subcommand handlers ---------------------------------------------------------------


def cmd_partitions(args) -> int:
    kinds = {"strict": enumerate_strict, "odd": enumerate_odd, "all": enumerate_partitions}
    _emit([list(p) for p in kinds[args.kind](args.size)])
    return 0


def cmd_graph(args) -> int:
    src = _strict(args.partition)
    row = schur_graph.up_row(src) if args.direction == "up" else schur_graph.down_row(src)
    _emit({"source": list(src),
           "targets": [{"partition": list(t), "prob": rational(p)} for t, p in row.targets.items()]})
    return 0


def cmd_gamma(args) -> int:
    f = gamma.basis_element(args.basis, args.index)
    if args.gamma_cmd == "expand":
        _emit(coeff_map(gamma.to_basis(f, args.to)))
    else:
        _emit(rational(f.evaluate(_strict(args.at))))
    return 0


def cmd_sergeev(args) -> int:
    if args.sergeev_cmd == "class-sum":
        mu = _odd(args.mu)
        if sum(mu) > args.level:
            raise UsageError(f"|μ| = {sum(mu)} exceeds the level {args.level}")
        _check_level(args.level)
        _emit(sergeev.class_sum_scaled(mu, args.level).to_json())
    elif args.sergeev_cmd == "idempotent":
        lam = _strict(args.lam)
        _check_level(sum(lam))
        _emit(sergeev.central_idempotent(lam).to_json())
    else:
        lam, mu = _strict(args.lam), _odd(args.mu)
        n = sum(lam)
        if sum(mu) > n:
            raise UsageError(f"|μ| = {sum(mu)} exceeds |λ| = {n}")
        _emit(rational(gamma.character(lam, pad_ones(mu, n))))
    return 0


def _check_level(n: int) -> None:
    if n > sergeev.MAX_LEVEL:
        raise UsageError(f"level {n} exceeds the supported maximum {sergeev.MAX_LEVEL}")


def cmd_center(args) -> int:
    if args.center_cmd == "phi":
        if args.alpha is not None:
            x = center.alpha_of_partition(_odd(args.alpha))
        else:
            x = center.d(args.d)
        _emit(coeff_map(center.phi(x).coeffs))
    elif args.center_cmd == "fock":
        _check_level(args.level)
        if args.alpha is not None:
            x = center.alpha_of_partition(_odd(args.alpha))
        elif args.dbar is not None:
            x = center.dbar(args.dbar)
        else:
            x = center.d(args.d)
        _emit(center.fock_image(x, args.level).to_json())
    else:
        lam = _strict(args.lam)
        _check_level(sum(lam))
        _emit(coeff_map(center.idempotent_closure(lam).coeffs))
    return 0


def cmd_w(args) -> int:
    op = waction.operator_by_name(args.gen, args.cutoff)
    image = op.apply_coords({_odd(args.pfrak): Fraction(1)})
    e = op.sqrt2
    scale = Fraction(2) ** (e // 2)
    coeffs = {k: image[k] * scale for k in canonical_sorted(image)}
    if e % 2:
        _emit({"factor": "sqrt2", "coeffs": coeff_map(coeffs)})
    else:
        _emit(coeff_map(coeffs))
    return 0


def cmd_verify(args) -> int:
    reports = verify.run_verify(args.suite, args.max_level, args.cutoff, args.seed)
    failed = sum(r.failure_count for r in reports)
    if args.json:
        _emit({"ok": failed == 0, "reports": [r.to_json() for r in reports]})
    else:
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            print(f"{status:4}  {r.suite:20} cases={r.cases:<5} failures={r.failure_count:<4} {r.wall_time:7.2f}s")
            for f in r.failures[:5]:
                print(f"      {f['case']}: {f['lhs']} != {f['rhs']}")
        print(f"{'OK' if failed == 0 else 'FAILED'}: {len(reports)} suites, {failed} failures")
    return 0 if failed == 0 else 1


def cmd_export(args) -> int:
    path = verify.write_table(args.kind, args.size, args.output) if args.output else None
    if path is None:
        _emit(verify.export_table(args.kind, args.size))
    return 0


# Parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help="directory for cached tables (default: $TWC_CACHE_DIR, else no disk cache)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed for randomized suites")
    common.add_argument("-n", "--max-level", type=int, default=argparse.SUPPRESS, dest="max_level",
                        help="largest Sergeev level / size")
    common.add_argument("--cutoff", type=int, default=argparse.SUPPRESS, help="degree cutoff for Γ truncations")

    parser = argparse.ArgumentParser(prog="twc", parents=[common],
                                     description="Exact computations in Γ, the Schur graph and Sergeev algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list partitions of a size")
    p.add_argument("size", type=int)
    p.add_argument("--kind", choices=("strict", "odd", "all"), default="strict")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("graph", parents=[common], help="transition row of the Schur graph")
    p.add_argument("partition", type=_parts)
    p.add_argument("--direction", choices=("up", "down"), default="up")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gamma", parents=[common], help="elements of Γ")
    gsub = p.add_subparsers(dest="gamma_cmd", required=True)
    for name in ("expand", "eval"):
        q = gsub.add_parser(name, parents=[common])
        q.add_argument("--basis", choices=gamma.BASES, default="Qstar")
        q.add_argument("--index", type=_parts, required=True)
        if name == "expand":
            q.add_argument("--to", choices=gamma.BASES, default="p", help="output basis (default p)")
        else:
            q.add_argument("--at", type=_parts, required=True, help="strict partition to evaluate at")
        q.set_defaults(func=cmd_gamma)

    p = sub.add_parser("sergeev", parents=[common], help="Sergeev algebra elements")
    ssub = p.add_subparsers(dest="sergeev_cmd", required=True)
    q = ssub.add_parser("class-sum", parents=[common])
    q.add_argument("--mu", type=_parts, required=True)
    q.set_defaults(func=cmd_sergeev)
    q = ssub.add_parser("idempotent", parents=[common])
    q.add_argument("--lambda", dest="lam", type=_parts, required=True)
    q.set_defaults(func=cmd_sergeev)
    q = ssub.add_parser("character", parents=[common], help="χ^λ(μ); μ is padded with 1s up to |λ|")
    q.add_argument("--lambda", dest="lam", type=_parts, required=True)
    q.add_argument("--mu", type=_parts, required=True)
    q.set_defaults(func=cmd_sergeev)

    p = sub.add_parser("center", parents=[common], help="the center and its images")
    csub = p.add_subparsers(dest="center_cmd", required=True)
    for name in ("phi", "fock"):
        q = csub.add_parser(name, parents=[common])
        group = q.add_mutually_exclusive_group(required=True)
        group.add_argument("--alpha", type=_parts, help="odd partition μ, meaning α_μ")
        group.add_argument("--d", type=int, help="even index 2k, meaning d_{2k}")
        if name == "fock":
            group.add_argument("--dbar", type=int, help="k, meaning d̄_{2k}")
        q.set_defaults(func=cmd_center)
    q = csub.add_parser("idempotent-closure", parents=[common])
    q.add_argument("--lambda", dest="lam", type=_parts, required=True)
    q.set_defaults(func=cmd_center)

    p = sub.add_parser("w", parents=[common], help="operators of the W action on Γ")
    wsub = p.add_subparsers(dest="w_cmd", required=True)
    q = wsub.add_parser("apply", parents=[common])
    q.add_argument("--gen", choices=waction.GENERATORS, required=True)
    q.add_argument("--pfrak", type=_parts, required=True, help="odd partition μ of the input 𝔭_μ")
    q.set_defaults(func=cmd_w)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append",
                   help=f"suite name or 'all' (repeatable); one of {', '.join(verify.ALL_SUITES)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write a table as JSON")
    p.add_argument("kind", choices=verify.EXPORT_KINDS)
    p.add_argument("size", type=int)
    p.add_argument("-o", "--output", help="file to write (default: standard output)")
    p.set_defaults(func=cmd_export)
    return parser


DEFAULTS = {"cache_dir": None, "json": False, "seed": 0, "max_level": None, "cutoff": waction.DEFAULT_CUTOFF}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.cache_dir is not None:
        cache.configure(args.cache_dir)
    args.level = args.max_level if args.max_level is not None else 5
    if args.command == "verify":
        args.suite = args.suite or ["all"]
        args.max_level = args.level
    try:
        return args.func(args)
    except (UsageError, ValueError, waction.CutoffExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
