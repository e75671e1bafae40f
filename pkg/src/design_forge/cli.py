"""Command-line front end for building and checking designs.

Subcommands: construct (build a design of an admissible order and write
its certificate), verify (check a certificate file), gdd (build and
verify a group divisible design), catalog (print the shipped base blocks
and target graphs), selftest (run the internal cross-checks).

Exit status: 0 success or pass, 1 verification failure, 2 usage error or
missing ingredient.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Sequence

from .assemble import ConstructionError, construct_design
from .blocks import (
    BaseBlock,
    DevelopmentError,
    catalog,
    develop,
    difference_transversal_check,
)
from .certify import (
    Certificate,
    CertificateParseError,
    CertMode,
    certify,
    certify_raw_edges,
    read_certificate,
    write_certificate,
)
from .gdd import (
    BudgetExhaustedError,
    GddType,
    IngredientStore,
    exact_cover_search,
    gdd_24_t,
    write_gdd_file,
)
from .targets import (
    TargetId,
    format_edge_list,
    is_isomorphic,
    line_k44,
    shrikhande,
    srg_parameters,
    target_graph,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="design-forge",
        description="Build and verify edge decompositions of complete graphs "
        "into the Shrikhande graph or the line graph of K(4,4).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a design and write its certificate")
    p.add_argument("--graph", required=True, choices=[t.value for t in TargetId])
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--ingredients", type=Path, default=None,
                   help="directory of ingredient GDD files (overrides the environment)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="certify a certificate file")
    p.add_argument("path", type=Path)
    p.add_argument("--raw", action="store_true",
                   help="re-check each block as a raw edge set by isomorphism search")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gdd", help="build and verify a 4-GDD")
    p.add_argument("--type", required=True, dest="gdd_type", metavar="TYPE",
                   help="group type, e.g. 24^5 or 3^5")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--ingredients", type=Path, default=None)
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="node budget for the exact-cover search fallback")
    p.set_defaults(func=_cmd_gdd)

    p = sub.add_parser("catalog", help="print the shipped base blocks and target graphs")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("selftest", help="run the internal cross-checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def _store(args: argparse.Namespace) -> IngredientStore | None:
    if getattr(args, "ingredients", None) is not None:
        return IngredientStore(args.ingredients)
    return None  # construct/gdd fall back to the env var, then package data


def _print_report(report) -> None:
    print(report.summary())
    for msg in report.label_errors[:20]:
        print(f"  label: {msg}")
    for (u, v), count in report.pair_errors[:20]:
        print(f"  pair ({u},{v}) covered {count} times, want 1")
    for msg in report.part_errors[:20]:
        print(f"  part: {msg}")
    shown = min(len(report.label_errors), 20) + min(len(report.pair_errors), 20)
    total = len(report.label_errors) + len(report.pair_errors) + len(report.part_errors)
    if total > shown + min(len(report.part_errors), 20):
        print(f"  ... {total} problems in total")


def _cmd_construct(args: argparse.Namespace) -> int:
    design = construct_design(TargetId(args.graph), args.order, _store(args))
    cert = Certificate.from_design(design)
    write_certificate(cert, args.out)
    # construct's contract is that its own output verifies; check the file,
    # not the in-memory design
    report = certify(read_certificate(args.out))
    if not report.passed:
        _print_report(report)
        return 1
    print(f"{args.out}: {args.graph} order {args.order}, {report.summary()}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        cert = read_certificate(args.path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CertificateParseError as exc:
        print(f"{args.path}: parse error: {exc}", file=sys.stderr)
        return 1
    if args.raw:
        if cert.mode is not CertMode.COMPLETE:
            print("error: --raw applies to complete-mode certificates only",
                  file=sys.stderr)
            return 2
        goal = target_graph(cert.target)
        parts = [
            [(block[u - 1], block[v - 1]) for u, v in goal.graph.edges]
            for block in cert.blocks
        ]
        report = certify_raw_edges(cert.order, parts, cert.target)
    else:
        report = certify(cert)
    _print_report(report)
    return 0 if report.passed else 1


def _cmd_gdd(args: argparse.Namespace) -> int:
    gdd_type = GddType.parse(args.gdd_type)
    sizes = gdd_type.group_sizes()
    if set(sizes) == {24}:
        design = gdd_24_t(len(sizes), _store(args))
    else:
        design = exact_cover_search(gdd_type, 4, node_budget=args.budget)
        if design is None:
            print(f"no 4-GDD of type {gdd_type} exists (search tree exhausted)",
                  file=sys.stderr)
            return 1
    if args.out is not None:
        write_gdd_file(design, args.out)
        print(f"{args.out}: 4-GDD of type {gdd_type}, {len(design.blocks)} blocks, verified")
    else:
        print(f"4-GDD of type {gdd_type}, {len(design.blocks)} blocks, verified")
    if design.provenance:
        print(f"  via {design.provenance}")
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    print("base blocks (target order omega labels):")
    for (target, n), block in sorted(catalog().items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        labels = " ".join(str(x) for x in block.labels)
        print(f"  {target.value} {n} {block.omega} {labels}")
    for target in TargetId:
        print(f"\n{target.value} edge list:")
        sys.stdout.write(format_edge_list(target_graph(target).graph))
    return 0


def _mutations(block: BaseBlock, count: int, rng: random.Random) -> list[BaseBlock]:
    out = []
    n = block.ring.order
    for _ in range(count):
        labels = list(block.labels)
        pos = rng.randrange(16)
        labels[pos] = (labels[pos] + rng.randrange(1, n)) % n
        out.append(BaseBlock(tuple(labels), block.target, block.ring, block.omega))
    return out


def _develop_certifies(block: BaseBlock) -> bool:
    try:
        design = develop(block)
    except DevelopmentError:
        return False
    return certify(Certificate.from_design(design)).passed


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1

    for target in (shrikhande(), line_k44()):
        check(f"{target.id.value} is srg(16,6,2,2)",
              srg_parameters(target.graph) == (16, 6, 2, 2))
    check("the two targets are non-isomorphic",
          is_isomorphic(shrikhande().graph, line_k44().graph) is None)

    rng = random.Random(20260816)
    for (target, n), block in sorted(catalog().items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        check(f"{target.value} {n}: develops to a certified design",
              difference_transversal_check(block) and _develop_certifies(block))
        agree = all(
            difference_transversal_check(m) == _develop_certifies(m)
            for m in _mutations(block, 20, rng)
        )
        check(f"{target.value} {n}: transversal criterion agrees with develop+certify "
              f"on 20 mutations", agree)

    print(f"{failures} failures" if failures else "all checks passed")
    return 1 if failures else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        # non-admissible orders, malformed types, missing ingredients, bad paths
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())
