"""Command-line front end.

Exit codes: 0 success, 1 formula/oracle disagreement under ``--strict``,
2 unparsable input, 3 invalid rank or shape (including box-count mismatch
and a non-occurring [nu] for ``labels``), 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .closed_form import (
    BoxCountError, su3_eta_labels, su3_multiplicity, su4_eta_labels, su4_multiplicity,
)
from .complement import classify_bounds, coupled_pattern_su3, coupled_pattern_su4
from .lr import decompose, lr_coefficient
from .partition import (
    Partition, PartitionError, PartitionSyntaxError, RankError, Su3Dynkin, dynkin_to_partition,
    parse_partition, partition_to_dynkin, reduce_sun,
)
from .sweep import SweepConfig, run_sweep, threads_from_env, write_report

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_SHAPE, EXIT_IO = 0, 1, 2, 3, 4


class ShapeError(Exception):
    pass


def _fmt_label(eta) -> str:
    return str(eta[0]) if len(eta) == 1 else "(" + ",".join(map(str, eta)) + ")"


def _fmt_labels(labels) -> str:
    return "η∈{" + ",".join(_fmt_label(e) for e in labels) + "}"


def _rank(n: int) -> int:
    if n < 2:
        raise ShapeError(f"SU(n) needs n >= 2, got {n}")
    return n


def _parse_irrep(text: str, n: int) -> Partition:
    """A partition, or for SU(3) also a Dynkin pair written "(lam,mu)"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        if n != 3:
            raise PartitionSyntaxError(f"Dynkin labels {text!r} are only accepted for n = 3")
        parts = body[1:-1].split(",")
        if len(parts) != 2 or not all(x.strip().isdigit() for x in parts):
            raise PartitionSyntaxError(f"cannot parse Dynkin pair {text!r}")
        return dynkin_to_partition(Su3Dynkin(int(parts[0]), int(parts[1])))
    return parse_partition(text)


def _reduced(args, out) -> tuple[Partition, Partition]:
    """Parse and reduce --lambda/--mu, echoing any reduction as a comment line."""
    n = _rank(args.n)
    result = []
    for name, text in (("lambda", args.lam), ("mu", args.mu)):
        p = _parse_irrep(text, n)
        r = reduce_sun(p, n)
        if r != p and out is not None:
            out.append(f"# {name}: {p} reduced to {r} in SU({n})")
        result.append(r)
    return result[0], result[1]


def _formula(lam: Partition, mu: Partition, nu: Partition, n: int) -> tuple[int, list]:
    if n == 3:
        first, second = partition_to_dynkin(lam), partition_to_dynkin(mu)
        return su3_multiplicity(first, second, nu), su3_eta_labels(first, second, nu)
    if n == 4:
        return su4_multiplicity(lam, mu, nu), su4_eta_labels(lam, mu, nu)
    raise ShapeError(f"closed-form multiplicities exist for n = 3, 4 only, got {n}")


def _parse_nu(args, lam: Partition, mu: Partition) -> Partition:
    nu = parse_partition(args.nu)
    if len(nu) > args.n:
        raise ShapeError(f"{nu} has more than {args.n} rows")
    if nu.size != lam.size + mu.size:
        raise BoxCountError(f"{nu} has {nu.size} boxes, {lam} x {mu} has {lam.size + mu.size}")
    return nu


def cmd_decompose(args) -> int:
    notes: list[str] = []
    lam, mu = _reduced(args, notes)
    dec = decompose(lam, mu, args.n, labels=args.labels)
    if args.format == "json":
        data = dec.to_json()
        data["reduction"] = {"lambda": _parse_irrep(args.lam, args.n).to_json(),
                             "mu": _parse_irrep(args.mu, args.n).to_json()}
        print(json.dumps(data, sort_keys=True))
        return EXIT_OK
    for line in notes:
        print(line)
    print(f"# SU({args.n}): {lam} x {mu}")
    for nu, term in dec.terms.items():
        line = f"{nu}  {term.multiplicity}"
        if term.labels:
            line += "  " + _fmt_labels(term.labels)
        print(line)
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    notes: list[str] = []
    lam, mu = _reduced(args, notes)
    nu = _parse_nu(args, lam, mu)
    method = args.method or ("both" if args.n in (3, 4) else "oracle")
    for line in notes:
        print(line)
    if method == "oracle":
        print(lr_coefficient(lam, mu, nu, args.n))
        return EXIT_OK
    formula, _ = _formula(lam, mu, nu, args.n)
    if method == "formula":
        print(formula)
        return EXIT_OK
    oracle = lr_coefficient(lam, mu, nu, args.n)
    agree = formula == oracle
    print(oracle)
    print(f"formula={formula} oracle={oracle} {'agree' if agree else 'DISAGREE'}")
    return EXIT_MISMATCH if (args.strict and not agree) else EXIT_OK


def cmd_labels(args) -> int:
    notes: list[str] = []
    lam, mu = _reduced(args, notes)
    nu = _parse_nu(args, lam, mu)
    mult, labels = _formula(lam, mu, nu, args.n)
    if mult == 0:
        raise ShapeError(f"{nu} does not occur in {lam} x {mu}")
    if args.n == 3:
        first, second = partition_to_dynkin(lam), partition_to_dynkin(mu)
        pats = [coupled_pattern_su3(first, second, nu, eta[0]) for eta in labels]
    else:
        pats = [coupled_pattern_su4(lam, mu, nu, eta) for eta in labels]
    if args.format == "json":
        print(json.dumps({"lambda": lam.to_json(), "mu": mu.to_json(), "nu": nu.to_json(),
                          "n": args.n, "patterns": [p.to_json() for p in pats]},
                         sort_keys=True))
        return EXIT_OK
    for line in notes:
        print(line)
    for p in pats:
        print(f"η={_fmt_label(p.eta)}")
        print(p.format())
    return EXIT_OK


def cmd_classify(args) -> int:
    group = args.group.upper()
    args.n = {"SU3": 3, "SU4": 4}.get(group, 0)
    if not args.n:
        raise ShapeError(f"unknown group {args.group!r}")
    lam, mu = _reduced(args, None)
    nu = _parse_nu(args, lam, mu)
    report = classify_bounds(group, lam, mu, nu)
    print(json.dumps(report.to_json(), sort_keys=True))
    return EXIT_OK


def cmd_validate(args) -> int:
    cfg = SweepConfig(group=args.group, max_boxes=args.max_boxes, strict=args.strict,
                      output_path=args.output, parallelism=threads_from_env(args.parallelism))
    try:
        open(cfg.output_path, "w", encoding="utf-8").close()
    except OSError as exc:
        print(f"error: cannot write report {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    records = []
    for group in cfg.groups:
        res = run_sweep(group, cfg.max_boxes, cfg.parallelism)
        records.extend(res.records)
        print(res.summary())
    try:
        write_report(cfg.output_path, records)
    except OSError as exc:
        print(f"error: cannot write report {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"report: {cfg.output_path} ({len(records)} records)")
    if cfg.strict and records:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrkron", description="Kronecker products of SU(n) irreps by the Littlewood rule.")
    sub = parser.add_subparsers(dest="command", required=True)

    def factors(p, nu=False):
        p.add_argument("--lambda", dest="lam", required=True, help="first irrep, e.g. [3,1]")
        p.add_argument("--mu", required=True, help="second irrep")
        if nu:
            p.add_argument("--nu", required=True, help="coupled irrep")

    p = sub.add_parser("decompose", help="list [nu] with multiplicities and labels")
    factors(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--labels", action=argparse.BooleanOptionalAction, default=True,
                   help="attach eta labels (n = 3, 4)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("multiplicity", help="multiplicity of one [nu]")
    factors(p, nu=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default=None)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("labels", help="complementary-group patterns for one [nu]")
    factors(p, nu=True)
    p.add_argument("--n", type=int, required=True, choices=(3, 4))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("classify", help="tag each eta bound as betweenness or Littlewood")
    factors(p, nu=True)
    p.add_argument("--group", required=True, choices=("SU3", "SU4", "su3", "su4"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("validate", help="closed-form versus enumeration sweep")
    p.add_argument("--group", default="both", choices=("SU3", "SU4", "both", "su3", "su4"))
    p.add_argument("--max-boxes", type=int, default=6)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--output", default="lrkron-report.jsonl")
    p.add_argument("--parallelism", type=int, default=1)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RankError, BoxCountError, ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE


if __name__ == "__main__":
    sys.exit(main())
