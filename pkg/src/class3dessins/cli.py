"""Command line front end.

Exit status: 0 when every check passes, 1 when a verification is falsified,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import dessin, family, oracle
from .collect import Family, GroupParams, ParameterError, group_of, validate_params

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("G", "|G|", "|Aut(G)|", "Type of D", "Genus of D")


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _params_from_args(args) -> GroupParams:
    if getattr(args, "params_json", None):
        try:
            data = json.loads(args.params_json)
            return GroupParams.from_dict(data)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad --params-json: {exc}") from None
    missing = [k for k in ("family", "p", "a", "b", "c") if getattr(args, k) is None]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join('--' + k for k in missing)}")
    return validate_params(args.family, args.p, args.a, args.b, args.c)


def table_rows(p: int, max_a: int) -> list[dict]:
    rows = []
    for params in family.enumerate_params(p, max_a):
        inv = family.invariants_of(params)
        rows.append({"params": params.to_dict(), **inv.to_dict()})
    return rows


def render_table(rows: list[dict]) -> str:
    body = []
    for row in rows:
        prm = row["params"]
        body.append(
            (
                f"{prm['family']}({prm['p']},{prm['a']},{prm['b']},{prm['c']})",
                str(row["group_order"]),
                row["aut_order_factored"],
                "({},{},{})".format(*row["dessin_type"]),
                str(row["genus"]),
            )
        )
    widths = [max(len(r[i]) for r in [TABLE_COLUMNS, *body]) for i in range(len(TABLE_COLUMNS))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*TABLE_COLUMNS), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in body]
    return "\n".join(line.rstrip() for line in lines)


def cmd_table(args) -> int:
    rows = table_rows(args.p, args.max_a)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(render_table(rows) if rows else f"no classified groups with p={args.p}, a<={args.max_a}")
    return EXIT_OK


def _collect_checks(params: GroupParams, seed: int, samples: int = 2000) -> dict:
    group = group_of(params)
    collector = oracle.LetterCollector(params)
    rng = random.Random(seed)
    moduli = group.moduli

    def rand():
        return group.normalize([rng.randrange(m) for m in moduli])

    mismatches = {"product": 0, "power": 0, "commutator": 0, "inverse": 0, "associativity": 0}
    for _ in range(samples):
        g, h, k = rand(), rand(), rand()
        if group.multiply(g, h) != collector.multiply(g, h):
            mismatches["product"] += 1
        n = rng.randrange(-group.px, 2 * group.px)
        if group.power(g, n) != group.power_by_squaring(g, n):
            mismatches["power"] += 1
        if group.commutator(g, h) != group.commutator_by_definition(g, h):
            mismatches["commutator"] += 1
        if group.multiply(g, group.inverse(g)) != group.identity:
            mismatches["inverse"] += 1
        if group.multiply(group.multiply(g, h), k) != group.multiply(g, group.multiply(h, k)):
            mismatches["associativity"] += 1
    relations = all(rel.holds(group, group.x, group.y) for rel in family.relators(params))
    return {
        "ok": relations and not any(mismatches.values()),
        "samples": samples,
        "mismatches": mismatches,
        "defining_relations_hold": relations,
    }


def run_verify(params: GroupParams, mode: str, k: int | None, seed: int | None, jobs: int, max_pairs: int):
    """All verification stages for one parameter tuple; returns the JSON-ready report."""
    started = time.perf_counter()
    seed = dessin.default_seed(params) if seed is None else seed
    inv = family.invariants_of(params)
    checks: dict[str, dict] = {}
    checks["collect"] = _collect_checks(params, seed)

    within_cap = params.order <= oracle.cap_elements()
    if within_cap:
        G = oracle.from_collection(params)
        assoc = oracle.check_associativity(G)
        checks["cayley"] = {
            "ok": assoc.ok,
            "size": G.size,
            "associativity_triples": assoc.triples_checked,
            "witness": assoc.witness,
        }
        structure = oracle.verify_structure_lemmas(params, G)
        checks["structure"] = structure.to_dict()
        pairs = oracle.count_generating_pairs(G)
        checks["generating_pairs"] = {
            "ok": pairs == inv.aut_order.value,
            "counted": pairs,
            "aut_order": inv.aut_order.value,
        }
    else:
        checks["cayley"] = {"ok": True, "skipped": f"|G| = {params.order} above cap"}

    group = group_of(params)
    base = dessin.GenPair(group.x, group.y)
    type_ = dessin.dessin_type(base, params)
    g = dessin.genus(base, params)
    formula_pairs = dessin.count_generating_pairs_formula(params)
    checks["invariants"] = {
        "ok": (
            params.order == inv.group_order
            and type_ == inv.dessin_type
            and g == inv.genus
            and formula_pairs == inv.aut_order.value
        ),
        "group_order": params.order,
        "dessin_type": list(type_),
        "genus": g,
        "burnside_pair_count": formula_pairs,
    }

    try:
        uniq = dessin.verify_unique_dessin(params, mode, k=k, seed=seed, jobs=jobs, max_pairs=max_pairs)
        checks["uniqueness"] = {"ok": uniq.ok, **uniq.to_dict()}
    except dessin.DessinUniquenessError as exc:
        checks["uniqueness"] = {
            "ok": False,
            "failing_pair": [list(exc.pair.first), list(exc.pair.second)],
            "error": str(exc),
        }

    failed = next((name for name, c in checks.items() if not c["ok"]), None)
    return {
        "params": params.to_dict(),
        "ok": failed is None,
        "failed": failed,
        "checks": checks,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def cmd_verify(args) -> int:
    params = _params_from_args(args)
    if args.exhaustive:
        mode, k = "exhaustive", None
    else:
        mode, k = "sampled", args.sampled or 10_000
    try:
        report = run_verify(params, mode, k, args.seed, args.jobs, args.max_pairs)
    except ValueError as exc:  # exhaustive gate, bad mode
        raise UsageError(str(exc)) from None
    print(json.dumps(report, indent=2, default=str))
    return EXIT_OK if report["ok"] else EXIT_FALSIFIED


def dessins_report(G: oracle.CayleyGroup, cap: int) -> dict:
    orbits = oracle.classify_dessins(G, cap)
    return {
        "n": G.size,
        "regular_dessins": len(orbits),
        "aut_order": orbits[0].size,
        "orbits": [o.to_dict() for o in orbits],
    }


def cmd_dessins(args) -> int:
    try:
        G = oracle.load_cayley_json(args.cayley_file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cayley_file}: {exc}") from None
    try:
        report = dessins_report(G, args.cap)
    except oracle.CapExceeded as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_export(args) -> int:
    sys.stdout.write(family.export_presentation(_params_from_args(args)))
    return EXIT_OK


def _add_param_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=[f.value for f in Family])
    parser.add_argument("--p", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--c", type=int)
    parser.add_argument("--params-json", help='e.g. \'{"family": "I", "p": 5, "a": 1, "b": 1, "c": 1}\'')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="class3dessins",
        description="Totally symmetric dessins on two-generator class-3 p-groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="closed-form invariants for every group with a <= max-a")
    p_table.add_argument("--p", type=int, required=True)
    p_table.add_argument("--max-a", type=_positive_int, required=True)
    p_table.add_argument("--format", choices=("text", "json"), default="text")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the verification suite for one group")
    _add_param_args(p_verify)
    mode = p_verify.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sampled", type=_positive_int, metavar="K", help="check K random generating pairs (default 10000)")
    p_verify.add_argument("--seed", type=int, help="sampling seed (default derived from the parameters)")
    p_verify.add_argument("--jobs", type=_positive_int, default=1)
    p_verify.add_argument("--max-pairs", type=_positive_int, default=dessin.DEFAULT_MAX_PAIRS)
    p_verify.set_defaults(func=cmd_verify)

    p_dessins = sub.add_parser("dessins", help="classify regular dessins of a group given by its Cayley table")
    p_dessins.add_argument("cayley_file")
    p_dessins.add_argument("--cap", type=_positive_int, default=oracle.DEFAULT_ORBIT_CAP)
    p_dessins.set_defaults(func=cmd_dessins)

    p_export = sub.add_parser("export-presentation", help="print the group's presentation")
    _add_param_args(p_export)
    p_export.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, UsageError, oracle.CayleyTableError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # e.g. dessins input that is not 2-generated
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
