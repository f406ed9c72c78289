"""Command line front end: the invariant table, decompositions, verification.

All reports serialize rationals exactly as {"num", "den"} integer pairs; a
float rendering appears only under the key "approx".  JSON output is
byte-deterministic for fixed inputs and version.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, invariants, oracle, pushforward
from .lattice import (
    count_halfbox3,
    count_pairs_sum_ge,
    enumerate_congruence_box,
    enumerate_halfbox3,
    enumerate_parity_box3,
)
from .rings import (
    SCROLL,
    SCROLL21,
    VERONESE2,
    FrobeniusContext,
    RingFamily,
    context_from_q,
    parse_ring,
)

SUITES = ("counts", "iso", "relations", "syzygy", "colength", "convergence", "all")

ENUMERATION_CAP = 27  # largest q whose cubes the twins enumerate outright


def _rational_json(value: Fraction) -> dict:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "approx": round(float(value), 6),
    }


def _rational_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fbetti_closed_form(family: RingFamily) -> str:
    if family.kind == SCROLL:
        return f"{family.delta}*{family.delta - 1}^i/2"
    if family.kind == SCROLL21:
        return "9*2^(i-1)/4"
    return "4*3^(i-1)"


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _default_families() -> list[str]:
    return [f"scroll:{d}" for d in range(2, 11)] + [SCROLL21, "veronese2"]


def build_table1_record(families: list[RingFamily], max_i: int) -> dict:
    rows = []
    for family in families:
        lim = invariants.limits(family)
        rows.append(
            {
                "family": family.label,
                "s": _rational_json(lim.s),
                "ehk": _rational_json(lim.ehk),
                "fbetti_closed_form": _fbetti_closed_form(family),
                "fbetti": {
                    str(i): _rational_json(lim.fbetti(i))
                    for i in range(1, max_i + 1)
                },
            }
        )
    return {
        "artifact_version": __version__,
        "command": {"name": "table1", "max_i": max_i},
        "rows": rows,
    }


def _render_table1_text(record: dict, max_i: int) -> str:
    headers = ["family", "s", "e_HK", "beta_i^F (i>=1)"] + [
        f"beta_{i}" for i in range(1, max_i + 1)
    ]
    lines = [headers]
    for row in record["rows"]:
        cells = [
            row["family"],
            _fraction_from_json(row["s"]),
            _fraction_from_json(row["ehk"]),
            row["fbetti_closed_form"],
        ] + [_fraction_from_json(row["fbetti"][str(i)]) for i in range(1, max_i + 1)]
        lines.append(cells)
    widths = [max(len(str(line[col])) for line in lines) for col in range(len(headers))]
    out = []
    for line in lines:
        out.append("  ".join(str(cell).ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(out)


def _render_table1_csv(record: dict, max_i: int) -> str:
    header = ["family", "s", "ehk", "fbetti_closed_form"] + [
        f"beta_{i}" for i in range(1, max_i + 1)
    ]
    lines = [",".join(header)]
    for row in record["rows"]:
        cells = [
            row["family"],
            _fraction_from_json(row["s"]),
            _fraction_from_json(row["ehk"]),
            row["fbetti_closed_form"],
        ] + [_fraction_from_json(row["fbetti"][str(i)]) for i in range(1, max_i + 1)]
        lines.append(",".join(str(c) for c in cells))
    return "\n".join(lines)


def _fraction_from_json(obj: dict) -> str:
    return _rational_text(Fraction(obj["num"], obj["den"]))


def cmd_table1(args) -> int:
    families = [parse_ring(text) for text in args.families.split(",")]
    record = build_table1_record(families, args.max_i)
    if args.format == "json":
        print(_dump(record))
    elif args.format == "csv":
        print(_render_table1_csv(record, args.max_i))
    else:
        print(_render_table1_text(record, args.max_i))
    return 0


def _legal_routes(family: RingFamily, ctx: FrobeniusContext) -> list[str]:
    routes = []
    try:
        pushforward.decompose(family, ctx, pushforward.ROUTE_PAPER)
        routes.append(pushforward.ROUTE_PAPER)
    except ValueError:
        pass
    if family.coprime_torsion(ctx):
        routes.append(pushforward.ROUTE_CLASSES)
    return routes


def build_decompose_record(
    family: RingFamily, ctx: FrobeniusContext, routes: list[str], max_i: int
) -> dict:
    per_route = {}
    for route in routes:
        dec = pushforward.decompose(family, ctx, route)
        est = invariants.finite_q_estimates(family, ctx, route)
        per_route[route] = {
            "multiplicities": dict(dec.multiplicities),
            "sum_mult_times_mu": dec.total_min_generators(),
            "estimates": {
                "s": _rational_json(est.s_est),
                "ehk": _rational_json(est.ehk_est),
                "fbetti": {
                    str(i): _rational_json(est.fbetti_est(i))
                    for i in range(1, max_i + 1)
                },
            },
        }
    diff = None
    if len(routes) == 2:
        a = pushforward.decompose(family, ctx, routes[0]).as_dict()
        b = pushforward.decompose(family, ctx, routes[1]).as_dict()
        diff = {
            tag: b.get(tag, 0) - a.get(tag, 0)
            for tag in sorted(set(a) | set(b))
            if b.get(tag, 0) != a.get(tag, 0)
        } or None
    return {
        "artifact_version": __version__,
        "command": {
            "name": "decompose",
            "family": family.label,
            "p": ctx.p,
            "e": ctx.e,
            "q": ctx.q,
            "routes": list(routes),
        },
        "decompositions": per_route,
        "route_diff": diff,
    }


def cmd_decompose(args) -> int:
    family = parse_ring(args.ring)
    ctx = FrobeniusContext(args.p, args.e)
    family.validate_context(ctx)
    if args.route == "both":
        routes = _legal_routes(family, ctx)
        if not routes:
            raise ValueError(
                f"no decomposition route is legal for {family.label} at {ctx}"
            )
    else:
        wanted = (
            pushforward.ROUTE_PAPER if args.route == "paper" else pushforward.ROUTE_CLASSES
        )
        routes = [wanted]
    record = build_decompose_record(family, ctx, routes, args.max_i)
    if args.format == "json":
        print(_dump(record))
    else:
        print(f"ring {family.label}, p={ctx.p}, e={ctx.e}, q={ctx.q}")
        for route, payload in record["decompositions"].items():
            mults = " ".join(
                f"{tag}={count}" for tag, count in payload["multiplicities"].items()
            )
            print(f"  route {route}: {mults}")
            est = payload["estimates"]
            print(
                "    estimates: s_est="
                + _fraction_from_json(est["s"])
                + ", ehk_est="
                + _fraction_from_json(est["ehk"])
            )
        if record["route_diff"]:
            diffs = " ".join(f"{k}:{v:+d}" for k, v in record["route_diff"].items())
            print(f"  route diff (classes minus paper): {diffs}")
        elif len(routes) == 2:
            print("  routes agree exactly")
    return 0


def _suite_counts(family: RingFamily, q: int) -> list[tuple[str, bool, str]]:
    ctx = context_from_q(q)
    out = []
    if family.kind == SCROLL:
        counts = pushforward.scroll_index_counts(family.delta, ctx)
        ok_sum = sum(counts) == q * q
        out.append((f"counts[q={q}] sum a_l = q^2", ok_sum, f"{sum(counts)} vs {q * q}"))
        enum = [
            enumerate_congruence_box(l * q, (l + 1) * q, 0, q, family.delta, 0)
            for l in range(family.delta)
        ]
        out.append(
            (f"counts[q={q}] a_l vs enumeration", counts == enum, f"{counts}")
        )
    elif family.kind == SCROLL21:
        p1, p2, p3 = pushforward.scroll21_index_counts(ctx)
        detail = f"({p1}, {p2}, {p3})"
        if q <= ENUMERATION_CAP:
            sets = pushforward.scroll21_index_sets(ctx)
            ok = (p1, p2, p3) == tuple(len(s) for s in sets)
            out.append((f"counts[q={q}] P-sets vs enumeration", ok, detail))
            half = count_halfbox3(q)
            ok_half = half == enumerate_halfbox3(q)
            out.append(
                (f"counts[q={q}] halfspace box formula", ok_half, f"{half}")
            )
        reduction = sum(count_pairs_sum_ge(q, k) for k in range(q))
        out.append(
            (
                f"counts[q={q}] layer reduction",
                reduction == count_halfbox3(q),
                f"{reduction}",
            )
        )
    else:
        a, b = pushforward.veronese_class_counts(ctx)
        out.append((f"counts[q={q}] parity split sums to q^3", a + b == q ** 3, f"({a}, {b})"))
        if q <= ENUMERATION_CAP:
            ok = a == enumerate_parity_box3(q, 0) and b == enumerate_parity_box3(q, 1)
            out.append((f"counts[q={q}] parity counts vs enumeration", ok, f"({a}, {b})"))
    return out


def _suite_iso(family: RingFamily, q: int) -> list[tuple[str, bool, str]]:
    if family.kind != SCROLL:
        return [(f"iso[q={q}]", True, "not applicable, skipped")]
    ctx = context_from_q(q)
    delta = family.delta
    if q <= delta:
        return [(f"iso[q={q}]", True, f"skipped, needs q > {delta}")]
    checked = 0
    ok = True
    for l in range(delta):
        for i in range(l * q, (l + 1) * q):
            for j in range(q):
                if (i + j) % delta != 0:
                    continue
                checked += 1
                if not pushforward.verify_summand_iso_scroll(delta, ctx, l, (i, j)):
                    ok = False
    return [(f"iso[q={q}] graded dimensions", ok, f"{checked} classes checked")]


def _suite_relations(family: RingFamily, q: int) -> list[tuple[str, bool, str]]:
    ctx = context_from_q(q)
    if family.kind == SCROLL21:
        if q > ENUMERATION_CAP:
            return [(f"relations[q={q}]", True, "skipped, enumeration too large")]
        _, p2, p3 = pushforward.scroll21_index_sets(ctx)
        ok = all(pushforward.verify_relations_scroll21(ctx, t) for t in p2 | p3)
        return [
            (
                f"relations[q={q}] generator relations",
                ok,
                f"{len(p2) + len(p3)} indices checked",
            )
        ]
    if family.kind == VERONESE2:
        ok = oracle.verify_veronese_sequences()
        return [(f"relations[q={q}] series shadows of the resolutions", ok, "")]
    return [(f"relations[q={q}]", True, "not applicable, skipped")]


def _suite_syzygy(family: RingFamily) -> list[tuple[str, bool, str]]:
    if family.kind != SCROLL:
        return [("syzygy", True, "not applicable, skipped")]
    delta = family.delta
    ok = all(oracle.verify_scroll_syzygy(delta, l) for l in range(1, delta))
    return [
        (
            "syzygy closed sets",
            ok,
            f"{delta - 1} syzygy sets checked (l=1..{delta - 1})",
        )
    ]


def _suite_colength(family: RingFamily, q: int) -> list[tuple[str, bool, str]]:
    ctx = context_from_q(q)
    result = oracle.lambda_frobenius_quotient(family, ctx)
    lim = invariants.limits(family)
    gap = abs(result.normalized - lim.ehk)
    ok = gap <= Fraction(4, q)
    return [
        (
            f"colength[q={q}] lambda/q^d near e_HK",
            ok,
            f"lambda={result.colength}, gap={gap}",
        )
    ]


def _suite_convergence(family: RingFamily, q_list: list[int]) -> list[tuple[str, bool, str]]:
    report = invariants.convergence_check(family, q_list)
    return [(c.describe().split("] ", 1)[1], c.ok, "") for c in report.checks]


def _run_suite(checks: list, label: str, runner, *args) -> None:
    try:
        checks.extend(runner(*args))
    except ValueError as exc:
        checks.append((label, False, f"error: {exc}"))


def build_verify_record(family: RingFamily, q_list: list[int], suite: str) -> dict:
    checks: list[tuple[str, bool, str]] = []
    for q in q_list:
        if suite in ("counts", "all"):
            _run_suite(checks, f"counts[q={q}]", _suite_counts, family, q)
        if suite in ("iso", "all"):
            _run_suite(checks, f"iso[q={q}]", _suite_iso, family, q)
        if suite in ("relations", "all"):
            _run_suite(checks, f"relations[q={q}]", _suite_relations, family, q)
        if suite in ("colength", "all"):
            _run_suite(checks, f"colength[q={q}]", _suite_colength, family, q)
    if suite in ("syzygy", "all"):
        _run_suite(checks, "syzygy", _suite_syzygy, family)
    if suite in ("convergence", "all"):
        _run_suite(checks, "convergence", _suite_convergence, family, q_list)
    return {
        "artifact_version": __version__,
        "command": {
            "name": "verify",
            "family": family.label,
            "q_list": list(q_list),
            "suite": suite,
        },
        "checks": [
            {"name": name, "ok": ok, "detail": detail} for name, ok, detail in checks
        ],
        "ok": all(ok for _, ok, _ in checks),
    }


def cmd_verify(args) -> int:
    family = parse_ring(args.ring)
    q_list = [int(part) for part in args.q.split(",") if part.strip()]
    if not q_list:
        raise ValueError("at least one q is required")
    for q in q_list:
        family.validate_context(context_from_q(q))
    record = build_verify_record(family, q_list, args.suite)
    if args.format == "json":
        print(_dump(record))
    else:
        for check in record["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            detail = f"  ({check['detail']})" if check["detail"] else ""
            print(f"{status} {check['name']}{detail}")
        total = len(record["checks"])
        failed = sum(1 for c in record["checks"] if not c["ok"])
        if failed:
            print(f"{failed} of {total} checks FAILED")
        else:
            print(f"all {total} checks passed")
    return 0 if record["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobcm",
        description=(
            "Exact Frobenius pushforward decompositions and asymptotic "
            "invariants for the graded rings of finite Cohen-Macaulay type."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    t1 = sub.add_parser("table1", help="print the table of limiting invariants")
    t1.add_argument("--format", choices=("text", "json", "csv"), default="text")
    t1.add_argument("--max-i", type=int, default=4, dest="max_i")
    t1.add_argument(
        "--families",
        default=",".join(_default_families()),
        help="comma separated ring labels",
    )
    t1.set_defaults(func=cmd_table1)

    dec = sub.add_parser("decompose", help="decompose the q-th root module")
    dec.add_argument("--ring", required=True)
    dec.add_argument("--p", type=int, required=True)
    dec.add_argument("--e", type=int, required=True)
    dec.add_argument("--route", choices=("paper", "classes", "both"), default="both")
    dec.add_argument("--format", choices=("text", "json"), default="text")
    dec.add_argument("--max-i", type=int, default=4, dest="max_i")
    dec.set_defaults(func=cmd_decompose)

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--ring", required=True)
    ver.add_argument("--q", required=True, help="comma separated prime powers")
    ver.add_argument("--suite", choices=SUITES, default="all")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
